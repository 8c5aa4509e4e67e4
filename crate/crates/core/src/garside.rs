//! Garside structure of the structure monoid.
//!
//! The structure monoid of a symmetric non-degenerate solution has the
//! quadratic presentation `xy = g_x(y) f_y(x)`. For distinct atoms `a, b`
//! there is exactly one relation `a·(a\b) = b·(b\a)` realising the right
//! lcm `a ∨ b`, with `a\b = g_a⁻¹(b)`; dually `f_a⁻¹(b)·a` realises the
//! left lcm. These atom complements drive word reversing, which decides
//! the word problem and computes lcms, and the divisors of the Garside
//! element `Δ = ∨X` form a lattice indexed by subsets of `X` in two ways
//! (by the atoms whose right lcm a divisor is, and dually on the left).

use crate::error::{Error, Result};
use crate::mask::{self, Mask};
use crate::solution::SolutionTable;

/// A word over the atom alphabet `{0..n-1}`; possibly empty. Equality of
/// the monoid elements represented by two words is decided by
/// [`ComplementSystem::words_equal`], never by letter-sequence equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn atom(a: usize) -> Self {
        Word(vec![a])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn mirrored(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// 1-based letter vector for reports.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&a| a + 1).collect()
    }

    /// Parse a 1-based letter vector, checking the alphabet bound.
    pub fn from_one_based(letters: &[usize], n: usize) -> Result<Self> {
        let mut v = Vec::with_capacity(letters.len());
        for &a in letters {
            if a == 0 || a > n {
                return Err(Error::Document(format!(
                    "word letter {a} out of range 1..={n}"
                )));
            }
            v.push(a - 1);
        }
        Ok(Word(v))
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|&a| format!("x{}", a + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

type AtomTable = Vec<Vec<Option<usize>>>;

/// Atom-level complement tables of a symmetric non-degenerate solution:
/// `rc[a][b] = g_a⁻¹(b)` and `lc[a][b] = f_a⁻¹(b)` for `a ≠ b`; the
/// diagonal is undefined.
#[derive(Debug, Clone)]
pub struct ComplementSystem {
    n: usize,
    rc: AtomTable,
    lc: AtomTable,
    step_limit: Option<u64>,
}

impl ComplementSystem {
    pub fn new(s: &SolutionTable) -> Result<Self> {
        s.require_valid()?;
        let n = s.n();
        let mut rc = vec![vec![None; n]; n];
        let mut lc = vec![vec![None; n]; n];
        for a in 0..n {
            let g_inv = s.g_perm(a)?.inverse();
            let f_inv = s.f_perm(a)?.inverse();
            for b in 0..n {
                if a != b {
                    rc[a][b] = Some(g_inv.apply(b));
                    lc[a][b] = Some(f_inv.apply(b));
                }
            }
        }
        Ok(Self { n, rc, lc, step_limit: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cap the number of reversing steps per call; `None` restores the
    /// default budget of `4^(|u|+|v|)`.
    pub fn with_step_limit(mut self, limit: Option<u64>) -> Self {
        self.step_limit = limit;
        self
    }

    /// `a\b = g_a⁻¹(b)` for distinct atoms.
    pub fn right_complement(&self, a: usize, b: usize) -> Option<usize> {
        self.rc[a][b]
    }

    /// `f_a⁻¹(b)` for distinct atoms.
    pub fn left_complement(&self, a: usize, b: usize) -> Option<usize> {
        self.lc[a][b]
    }

    fn limit_for(&self, u: &Word, v: &Word) -> u64 {
        self.step_limit.unwrap_or_else(|| {
            4u64.checked_pow((u.len() + v.len()).min(31) as u32)
                .unwrap_or(u64::MAX)
        })
    }

    /// Right-reverse the formal word `u⁻¹v`, returning `(u\v, v\u)` with
    /// `u·(u\v) = v·(v\u) = u ∨ v`.
    pub fn reverse_right(&self, u: &Word, v: &Word) -> Result<(Word, Word)> {
        reverse_grid(&self.rc, u, v, self.limit_for(u, v))
    }

    /// Left reversing, as right reversing in the mirror monoid: returns
    /// `(u', v')` with `u'·u = v'·v` the left lcm of `u` and `v`.
    pub fn reverse_left(&self, u: &Word, v: &Word) -> Result<(Word, Word)> {
        let (cu, cv) = reverse_grid(
            &self.lc,
            &u.mirrored(),
            &v.mirrored(),
            self.limit_for(u, v),
        )?;
        Ok((cu.mirrored(), cv.mirrored()))
    }

    /// `u` and `v` represent the same monoid element (both reversing
    /// complements are empty).
    pub fn words_equal(&self, u: &Word, v: &Word) -> Result<bool> {
        let (a, b) = self.reverse_right(u, v)?;
        Ok(a.is_empty() && b.is_empty())
    }

    /// `u` left-divides `v`.
    pub fn left_divides_word(&self, u: &Word, v: &Word) -> Result<bool> {
        Ok(self.reverse_right(v, u)?.0.is_empty())
    }

    /// `u` right-divides `v`.
    pub fn right_divides_word(&self, u: &Word, v: &Word) -> Result<bool> {
        Ok(self
            .reverse_grid_lc(&v.mirrored(), &u.mirrored())?
            .0
            .is_empty())
    }

    fn reverse_grid_lc(&self, u: &Word, v: &Word) -> Result<(Word, Word)> {
        reverse_grid(&self.lc, u, v, self.limit_for(u, v))
    }

    /// Word representing the right lcm `∨A`, folding the atoms of `A` in
    /// increasing order. Length `|A|` for a valid solution.
    pub fn right_lcm(&self, atoms: Mask) -> Result<Word> {
        if atoms == 0 {
            return Err(Error::Precondition("lcm of the empty set".into()));
        }
        let mut elems = mask::elements(atoms).into_iter();
        let mut w = Word::atom(elems.next().unwrap());
        for a in elems {
            let (c, _) = self.reverse_right(&w, &Word::atom(a))?;
            w = w.concat(&c);
        }
        Ok(w)
    }

    /// Word representing the left lcm of `A`, dual to [`Self::right_lcm`].
    pub fn left_lcm(&self, atoms: Mask) -> Result<Word> {
        if atoms == 0 {
            return Err(Error::Precondition("lcm of the empty set".into()));
        }
        left_lcm_word(self, atoms)
    }
}

/// One reversing pass over the `|u| × |v|` grid. Every edge carries at
/// most one letter because all relations have length-2 sides. `u\v` is
/// read along the bottom edge, `v\u` along the right edge.
fn reverse_grid(table: &AtomTable, u: &Word, v: &Word, limit: u64) -> Result<(Word, Word)> {
    let mut steps: u64 = 0;
    // horizontal[j]: letter flowing right into column j's current cell
    let mut horizontal: Vec<Option<usize>> = v.letters().iter().map(|&b| Some(b)).collect();
    let mut right_edge: Vec<Option<usize>> = Vec::with_capacity(u.len());
    for &a in u.letters() {
        let mut vert = Some(a);
        for h in horizontal.iter_mut() {
            steps += 1;
            if steps > limit {
                return Err(Error::ReversingBudget { steps, limit });
            }
            let (h_out, v_out) = match (vert, *h) {
                (None, hb) => (hb, None),
                (va, None) => (None, va),
                (Some(va), Some(hb)) => {
                    if va == hb {
                        (None, None)
                    } else {
                        let x = table[va][hb].expect("complement table is total off-diagonal");
                        let y = table[hb][va].expect("complement table is total off-diagonal");
                        (Some(x), Some(y))
                    }
                }
            };
            *h = h_out;
            vert = v_out;
        }
        right_edge.push(vert);
    }
    let bottom = Word(horizontal.into_iter().flatten().collect());
    let right = Word(right_edge.into_iter().flatten().collect());
    Ok((bottom, right))
}

/// A divisor of `Δ`: the right lcm of the atom set `x_ell`, equally the
/// left lcm of `x_r`, with its canonical word.
#[derive(Debug, Clone)]
pub struct Simple {
    x_ell: Mask,
    x_r: Mask,
    word: Word,
    balanced: bool,
}

impl Simple {
    pub fn x_ell(&self) -> Mask {
        self.x_ell
    }

    pub fn x_r(&self) -> Mask {
        self.x_r
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Same left- and right-divisor sets.
    pub fn is_balanced(&self) -> bool {
        self.balanced
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// A simple is addressed by its `x_ell` mask.
pub type SimpleId = Mask;

/// The `2^n` divisors of `Δ`, indexed by `x_ell` and, through
/// `r_index`, by `x_r`. Both indexings are verified bijections; building
/// the lattice certifies the Garside axioms on the input presentation.
///
/// ```
/// use ybx::garside::{DivisorLattice, Word};
/// use ybx::mask;
///
/// let lat = DivisorLattice::build(&ybx::fixtures::two_orbit_five()).unwrap();
/// // x1x2 = x3x4 is the simple with X_ell = {1,3} and X_r = {2,4}
/// let s = lat.simple(mask::from_elements([0, 2]));
/// assert_eq!(s.word().to_one_based(), vec![1, 2]);
/// assert_eq!(s.x_r(), mask::from_elements([1, 3]));
/// // it divides x1³ = ∨{x1,x2,x3} on the left but not on the right
/// let cube = mask::from_elements([0, 1, 2]);
/// assert!(lat.left_divides(s.x_ell(), cube));
/// assert!(!lat.right_divides(s.x_ell(), cube));
/// ```
#[derive(Debug, Clone)]
pub struct DivisorLattice {
    n: usize,
    simples: Vec<Simple>,
    r_index: Vec<SimpleId>,
    cs: ComplementSystem,
}

impl DivisorLattice {
    pub fn build(s: &SolutionTable) -> Result<Self> {
        let cs = ComplementSystem::new(s)?;
        Self::build_with(cs)
    }

    pub fn build_with(cs: ComplementSystem) -> Result<Self> {
        let n = cs.n();
        if n > mask::MAX_SET_SIZE {
            return Err(Error::Unsupported(format!(
                "divisor lattice is limited to n <= {}",
                mask::MAX_SET_SIZE
            )));
        }
        let full = mask::full(n);
        let count = 1usize << n;

        // Right lcm word of every subset, by increasing cardinality.
        let mut words: Vec<Option<Word>> = vec![None; count];
        words[0] = Some(Word::empty());
        let mut order: Vec<Mask> = (0..count as Mask).collect();
        order.sort_by_key(|&m| mask::size(m));
        for &m in order.iter().skip(1) {
            let top = 31 - (m.leading_zeros() as usize);
            let rest = m & !mask::bit(top);
            let base = words[rest as usize].clone().expect("built by cardinality");
            let (c, _) = cs.reverse_right(&base, &Word::atom(top))?;
            let w = base.concat(&c);
            if w.len() != mask::size(m) {
                return Err(Error::Garside(format!(
                    "right lcm of {} has length {}, expected {}",
                    mask::display(m),
                    w.len(),
                    mask::size(m)
                )));
            }
            words[m as usize] = Some(w);
        }

        // Atoms right-dividing each lcm give the x_r indexing.
        let mut x_r = vec![0 as Mask; count];
        let mut r_index = vec![Mask::MAX; count];
        for m in 0..count as Mask {
            let w = words[m as usize].as_ref().unwrap();
            let mut r = 0 as Mask;
            for a in 0..n {
                if cs.right_divides_word(&Word::atom(a), w)? {
                    r |= mask::bit(a);
                }
            }
            if mask::size(r) != mask::size(m) {
                return Err(Error::Garside(format!(
                    "divisor of Δ with X_ell = {} has X_r = {} of different cardinality",
                    mask::display(m),
                    mask::display(r)
                )));
            }
            if r_index[r as usize] != Mask::MAX {
                return Err(Error::Garside(format!(
                    "two divisors share X_r = {}",
                    mask::display(r)
                )));
            }
            x_r[m as usize] = r;
            r_index[r as usize] = m;
        }
        if x_r[full as usize] != full {
            return Err(Error::Garside("X_r(Δ) differs from X".into()));
        }

        // Cross-check the dual description: each simple is also the left
        // lcm of its X_r.
        for m in 0..count as Mask {
            if m == 0 {
                continue;
            }
            let w = words[m as usize].as_ref().unwrap();
            let dual = left_lcm_word(&cs, x_r[m as usize])?;
            if !cs.words_equal(w, &dual)? {
                return Err(Error::Garside(format!(
                    "divisor with X_ell = {} is not the left lcm of its X_r = {}",
                    mask::display(m),
                    mask::display(x_r[m as usize])
                )));
            }
        }

        // Balancedness: the right-divisor family {r_index[C] : C ⊆ x_r}
        // coincides with the left-divisor family {B : B ⊆ x_ell} iff every
        // right divisor's x_ell is contained in x_ell (counts agree).
        let mut simples = Vec::with_capacity(count);
        for m in 0..count as Mask {
            let balanced = mask::submasks(x_r[m as usize])
                .into_iter()
                .all(|c| r_index[c as usize] & !m == 0);
            simples.push(Simple {
                x_ell: m,
                x_r: x_r[m as usize],
                word: words[m as usize].take().unwrap(),
                balanced,
            });
        }
        let lat = Self { n, simples, r_index, cs };
        debug_assert!(lat.simple(lat.delta_id()).is_balanced());
        Ok(lat)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complement_system(&self) -> &ComplementSystem {
        &self.cs
    }

    pub fn simple_count(&self) -> usize {
        self.simples.len()
    }

    pub fn simple(&self, id: SimpleId) -> &Simple {
        &self.simples[id as usize]
    }

    pub fn simples(&self) -> impl Iterator<Item = &Simple> {
        self.simples.iter()
    }

    pub fn delta_id(&self) -> SimpleId {
        mask::full(self.n)
    }

    pub fn delta(&self) -> &Simple {
        self.simple(self.delta_id())
    }

    /// The simple whose `x_r` is the given mask.
    pub fn by_x_r(&self, r: Mask) -> SimpleId {
        self.r_index[r as usize]
    }

    pub fn left_divides(&self, s: SimpleId, t: SimpleId) -> bool {
        s & !t == 0
    }

    pub fn right_divides(&self, s: SimpleId, t: SimpleId) -> bool {
        self.simple(s).x_r & !self.simple(t).x_r == 0
    }

    /// Join for left divisibility (right lcm).
    pub fn join(&self, s: SimpleId, t: SimpleId) -> SimpleId {
        s | t
    }

    /// Meet for left divisibility (left gcd).
    pub fn meet(&self, s: SimpleId, t: SimpleId) -> SimpleId {
        s & t
    }

    /// Join for right divisibility (left lcm).
    pub fn right_join(&self, s: SimpleId, t: SimpleId) -> SimpleId {
        self.by_x_r(self.simple(s).x_r | self.simple(t).x_r)
    }

    /// Meet for right divisibility (right gcd).
    pub fn right_meet(&self, s: SimpleId, t: SimpleId) -> SimpleId {
        self.by_x_r(self.simple(s).x_r & self.simple(t).x_r)
    }

    /// Set of atoms dividing a balanced simple; errors on unbalanced input.
    pub fn support(&self, s: SimpleId) -> Result<Mask> {
        if !self.simple(s).is_balanced() {
            return Err(Error::Precondition(format!(
                "support of unbalanced element {}",
                self.simple(s).word()
            )));
        }
        Ok(s)
    }

    /// Maximal simple left divisor of `u` (the left gcd of `u` and `Δ`):
    /// the join of all atoms left-dividing `u`.
    pub fn head(&self, u: &Word) -> Result<SimpleId> {
        let mut m = 0 as Mask;
        for a in 0..self.n {
            if self.cs.left_divides_word(&Word::atom(a), u)? {
                m |= mask::bit(a);
            }
        }
        Ok(m)
    }

    /// Maximal simple right divisor of `u` (the right gcd of `u` and `Δ`).
    pub fn right_head(&self, u: &Word) -> Result<SimpleId> {
        let mut m = 0 as Mask;
        for a in 0..self.n {
            if self.cs.right_divides_word(&Word::atom(a), u)? {
                m |= mask::bit(a);
            }
        }
        Ok(self.by_x_r(m))
    }

    /// The simple represented by `u`, if `u` represents a divisor of `Δ`.
    pub fn identify(&self, u: &Word) -> Result<Option<SimpleId>> {
        let h = self.head(u)?;
        if self.simple(h).len() != u.len() {
            return Ok(None);
        }
        Ok(if self.cs.words_equal(self.simple(h).word(), u)? {
            Some(h)
        } else {
            None
        })
    }

    /// Greedy normal form: iteratively split off the head. Two words
    /// represent the same element iff their factor sequences coincide.
    pub fn normal_form(&self, u: &Word) -> Result<Vec<SimpleId>> {
        let mut rest = u.clone();
        let mut factors = Vec::new();
        while !rest.is_empty() {
            let h = self.head(&rest)?;
            if h == 0 {
                return Err(Error::Garside(format!(
                    "no atom divides the non-empty word {rest}"
                )));
            }
            let (tail, back) = self.cs.reverse_right(self.simple(h).word(), &rest)?;
            if !back.is_empty() {
                return Err(Error::Garside(format!(
                    "head {} does not divide {rest}",
                    self.simple(h).word()
                )));
            }
            factors.push(h);
            rest = tail;
        }
        Ok(factors)
    }

    /// Full agreement check between mask divisibility and the reversing
    /// oracle, over all ordered pairs of simples. Quadratic in `2^n`;
    /// meant for test-scale inputs.
    pub fn verify_against_reversing(&self) -> Result<()> {
        for s in 0..self.simples.len() as Mask {
            for t in 0..self.simples.len() as Mask {
                let sw = self.simple(s).word();
                let tw = self.simple(t).word();
                let oracle_left = self.cs.left_divides_word(sw, tw)?;
                if oracle_left != self.left_divides(s, t) {
                    return Err(Error::Garside(format!(
                        "left divisibility of {} in {} disagrees with the mask test",
                        sw, tw
                    )));
                }
                let oracle_right = self.cs.right_divides_word(sw, tw)?;
                if oracle_right != self.right_divides(s, t) {
                    return Err(Error::Garside(format!(
                        "right divisibility of {} in {} disagrees with the mask test",
                        sw, tw
                    )));
                }
            }
        }
        Ok(())
    }
}

fn left_lcm_word(cs: &ComplementSystem, atoms: Mask) -> Result<Word> {
    let mut elems = mask::elements(atoms).into_iter();
    let mut w = Word::atom(elems.next().expect("non-empty"));
    for a in elems {
        let (c, _) = cs.reverse_left(&w, &Word::atom(a))?;
        w = c.concat(&w);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lat5() -> DivisorLattice {
        DivisorLattice::build(&fixtures::two_orbit_five()).unwrap()
    }

    fn lat4() -> DivisorLattice {
        DivisorLattice::build(&fixtures::delta_pure_four()).unwrap()
    }

    #[test]
    fn one_based_word_conversion() {
        let w = Word::from_one_based(&[1, 4, 5], 5).unwrap();
        assert_eq!(w.letters(), &[0, 3, 4]);
        assert_eq!(w.to_one_based(), vec![1, 4, 5]);
        assert!(Word::from_one_based(&[0], 5).is_err());
        assert!(Word::from_one_based(&[6], 5).is_err());
        assert_eq!(format!("{}", Word::empty()), "1");
        assert_eq!(format!("{w}"), "x1 x4 x5");
    }

    #[test]
    fn complement_tables_on_fixtures() {
        let cs = ComplementSystem::new(&fixtures::two_orbit_five()).unwrap();
        // x1 x2 = x3 x4 realises x1 ∨ x3
        assert_eq!(cs.right_complement(0, 2), Some(1));
        assert_eq!(cs.right_complement(2, 0), Some(3));
        assert_eq!(cs.right_complement(0, 0), None);
        let cs4 = ComplementSystem::new(&fixtures::delta_pure_four()).unwrap();
        // x1 ∨ x2 = x1² = x2²
        assert_eq!(cs4.right_complement(0, 1), Some(0));
        assert_eq!(cs4.right_complement(1, 0), Some(1));
        let triv = ComplementSystem::new(&SolutionTable::trivial(3)).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    assert_eq!(triv.right_complement(a, b), Some(b));
                }
            }
        }
    }

    #[test]
    fn reversing_atoms_realises_relations() {
        let cs = ComplementSystem::new(&fixtures::two_orbit_five()).unwrap();
        let (c1, c3) = cs.reverse_right(&Word::atom(0), &Word::atom(2)).unwrap();
        assert_eq!(c1.letters(), &[1]);
        assert_eq!(c3.letters(), &[3]);
        let w = Word::new(vec![0, 1]);
        let (a, b) = cs.reverse_right(&w, &w).unwrap();
        assert!(a.is_empty() && b.is_empty());
    }

    #[test]
    fn lcm_of_two_squares_is_delta_on_four() {
        let cs = ComplementSystem::new(&fixtures::delta_pure_four()).unwrap();
        let u = Word::new(vec![0, 0]);
        let v = Word::new(vec![2, 2]);
        let (uc, vc) = cs.reverse_right(&u, &v).unwrap();
        // x1² ∨ x3² has length 4 = n, so it is Δ
        assert_eq!(u.len() + uc.len(), 4);
        assert!(cs
            .words_equal(&u.concat(&uc), &v.concat(&vc))
            .unwrap());
    }

    #[test]
    fn words_equal_on_fixture_relations() {
        let cs = ComplementSystem::new(&fixtures::two_orbit_five()).unwrap();
        assert!(cs
            .words_equal(&Word::new(vec![0, 1]), &Word::new(vec![2, 3]))
            .unwrap());
        assert!(!cs
            .words_equal(&Word::atom(0), &Word::atom(1))
            .unwrap());
    }

    #[test]
    fn budget_override_trips() {
        let cs = ComplementSystem::new(&fixtures::two_orbit_five())
            .unwrap()
            .with_step_limit(Some(2));
        let u = Word::new(vec![0, 0, 0]);
        let v = Word::new(vec![2, 2, 2]);
        assert!(matches!(
            cs.reverse_right(&u, &v),
            Err(Error::ReversingBudget { .. })
        ));
    }

    #[test]
    fn right_lcm_fold_values() {
        let cs = ComplementSystem::new(&fixtures::two_orbit_five()).unwrap();
        // ∨{x1,x2,x3} = x1³
        let w = cs.right_lcm(mask::from_elements([0, 1, 2])).unwrap();
        assert_eq!(w.letters(), &[0, 0, 0]);
        assert_eq!(cs.right_lcm(mask::bit(3)).unwrap().letters(), &[3]);
        // ∨X = x1⁴ x5
        let delta = cs.right_lcm(mask::full(5)).unwrap();
        assert_eq!(delta.letters(), &[0, 0, 0, 0, 4]);
    }

    #[test]
    fn lcm_is_independent_of_fold_order() {
        for s in [fixtures::two_orbit_five(), fixtures::delta_pure_four()] {
            let cs = ComplementSystem::new(&s).unwrap();
            let n = s.n();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if a == b || b == c || a == c {
                            continue;
                        }
                        // fold {a,b,c} in two different orders
                        let mut w1 = Word::atom(a);
                        for x in [b, c] {
                            let (ext, _) = cs.reverse_right(&w1, &Word::atom(x)).unwrap();
                            w1 = w1.concat(&ext);
                        }
                        let mut w2 = Word::atom(c);
                        for x in [a, b] {
                            let (ext, _) = cs.reverse_right(&w2, &Word::atom(x)).unwrap();
                            w2 = w2.concat(&ext);
                        }
                        assert!(cs.words_equal(&w1, &w2).unwrap(), "{w1} vs {w2}");
                    }
                }
            }
        }
    }

    #[test]
    fn left_lcm_and_right_head() {
        let cs = ComplementSystem::new(&fixtures::two_orbit_five()).unwrap();
        // the left lcm of {x1, x2} is x1² = x2²
        let w = cs.left_lcm(mask::from_elements([0, 1])).unwrap();
        assert!(cs.words_equal(&w, &Word::new(vec![0, 0])).unwrap());
        let l = lat5();
        // x1³ is its own maximal right divisor among the simples
        let cube = Word::new(vec![0, 0, 0]);
        assert_eq!(
            l.right_head(&cube).unwrap(),
            l.by_x_r(mask::from_elements([0, 1, 2]))
        );
        // x1⁵ has right head of length < 5
        let tall = Word::new(vec![0, 0, 0, 0, 0]);
        let rh = l.right_head(&tall).unwrap();
        assert!(l.simple(rh).len() < 5);
    }

    #[test]
    fn lattice_sizes_and_delta() {
        let l5 = lat5();
        assert_eq!(l5.simple_count(), 32);
        assert_eq!(l5.delta().len(), 5);
        let l4 = lat4();
        assert_eq!(l4.simple_count(), 16);
        assert_eq!(l4.delta().len(), 4);
        // Δ of the four-element fixture is x1⁴ (= x2⁴ = x3⁴ = x4⁴)
        assert!(l4
            .complement_system()
            .words_equal(l4.delta().word(), &Word::new(vec![0, 0, 0, 0]))
            .unwrap());
        let l2 = DivisorLattice::build(&SolutionTable::trivial(2)).unwrap();
        assert_eq!(l2.simple_count(), 4);
    }

    #[test]
    fn x_indexings_on_five() {
        let l = lat5();
        let s13 = mask::from_elements([0, 2]);
        assert_eq!(l.simple(s13).word().letters(), &[0, 1]);
        assert_eq!(l.simple(s13).x_r(), mask::from_elements([1, 3]));
        let delta = l.delta();
        assert_eq!(delta.x_ell(), mask::full(5));
        assert_eq!(delta.x_r(), mask::full(5));
        assert_eq!(l.simple(mask::bit(2)).x_r(), mask::bit(2));
    }

    #[test]
    fn divisibility_examples_on_five() {
        let l = lat5();
        let s13 = mask::from_elements([0, 2]);
        let s123 = mask::from_elements([0, 1, 2]);
        assert!(l.left_divides(s13, s123));
        assert!(!l.right_divides(s13, s123));
        assert!(l.left_divides(s123, s123));
        // mask tests agree with the reversing oracle everywhere
        l.verify_against_reversing().unwrap();
    }

    #[test]
    fn meet_join_examples() {
        let l = lat5();
        assert_eq!(l.join(mask::bit(0), mask::bit(2)), mask::from_elements([0, 2]));
        let s12 = mask::from_elements([0, 1]);
        let s23 = mask::from_elements([1, 2]);
        assert_eq!(l.meet(s12, s23), mask::bit(1));
        assert_eq!(l.meet(s12, l.delta_id()), s12);
    }

    #[test]
    fn balancedness_on_five() {
        let l = lat5();
        let s123 = mask::from_elements([0, 1, 2]);
        assert_eq!(l.simple(s123).x_r(), s123);
        assert!(!l.simple(s123).is_balanced());
        assert!(l.delta().is_balanced());
        assert_eq!(l.support(l.delta_id()).unwrap(), mask::full(5));
        assert!(l.simple(mask::from_elements([0, 1])).is_balanced());
        assert_eq!(l.support(mask::from_elements([0, 1])).unwrap(), mask::from_elements([0, 1]));
        assert!(l.support(s123).is_err());
    }

    #[test]
    fn head_and_normal_form_on_five() {
        let l = lat5();
        assert_eq!(l.head(l.delta().word()).unwrap(), l.delta_id());
        assert_eq!(
            l.head(&Word::new(vec![0, 1])).unwrap(),
            mask::from_elements([0, 2])
        );
        assert_eq!(l.head(&Word::atom(0)).unwrap(), mask::bit(0));
        // x1³ is a simple, so its form has one factor
        let nf = l.normal_form(&Word::new(vec![0, 0, 0])).unwrap();
        assert_eq!(nf, vec![mask::from_elements([0, 1, 2])]);
        // x1⁵ splits into two factors of total length 5
        let nf5 = l.normal_form(&Word::new(vec![0, 0, 0, 0, 0])).unwrap();
        assert_eq!(nf5.len(), 2);
        let total: usize = nf5.iter().map(|&f| l.simple(f).len()).sum();
        assert_eq!(total, 5);
        assert_eq!(l.normal_form(l.delta().word()).unwrap(), vec![l.delta_id()]);
    }

    #[test]
    fn delta_word_equals_x1_four_x5() {
        let l = lat5();
        assert!(l
            .complement_system()
            .words_equal(l.delta().word(), &Word::new(vec![0, 0, 0, 0, 4]))
            .unwrap());
        assert!(l
            .complement_system()
            .words_equal(l.delta().word(), &Word::new(vec![1, 1, 1, 1, 4]))
            .unwrap());
    }
}
