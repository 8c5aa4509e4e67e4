//! Subsets of `{0..n-1}` as bitmasks.

/// Subset of atoms, bit `i` set iff atom `i` is a member; `n <= 16`.
pub type Mask = u32;

pub const MAX_SET_SIZE: usize = 16;

pub fn bit(i: usize) -> Mask {
    1 << i
}

pub fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

pub fn contains(mask: Mask, i: usize) -> bool {
    mask & bit(i) != 0
}

pub fn size(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Members in increasing order (0-based).
pub fn elements(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(size(mask));
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out.push(i);
        m &= m - 1;
    }
    out
}

pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> Mask {
    iter.into_iter().fold(0, |m, i| m | bit(i))
}

/// Order subsets by cardinality, then lexicographically on their sorted
/// element lists. This is the deterministic order used in all reports.
pub fn cmp_size_lex(a: Mask, b: Mask) -> std::cmp::Ordering {
    size(a).cmp(&size(b)).then_with(|| elements(a).cmp(&elements(b)))
}

/// All non-empty submasks of `mask`, ascending as integers.
pub fn nonempty_submasks(mask: Mask) -> Vec<Mask> {
    let mut out = Vec::new();
    let mut sub = mask;
    loop {
        if sub != 0 {
            out.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out.sort_unstable();
    out
}

/// All submasks of `mask` including the empty one, ascending as integers.
pub fn submasks(mask: Mask) -> Vec<Mask> {
    let mut out = nonempty_submasks(mask);
    out.insert(0, 0);
    out
}

/// Render 0-based members as a 1-based set, e.g. `{1,3,5}`.
pub fn display(mask: Mask) -> String {
    let inner = elements(mask)
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}
