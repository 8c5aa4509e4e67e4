//! Finite set-theoretic solutions of the quantum Yang-Baxter equation.
//!
//! A solution is a bijection `S : X × X → X × X` on a finite set
//! `X = {x_1, ..., x_n}`, written `S(x, y) = (g_x(y), f_y(x))`. This module
//! validates the defining axioms (non-degeneracy, involutivity, the braid
//! relation), converts between tables, permutation families and quadratic
//! presentations, enumerates invariant subsets and decides isomorphism.

use crate::error::{Error, Result};
use crate::mask::{self, Mask};
use crate::perm::Permutation;

/// The map `S` on pairs of indices, stored row-major and 0-based.
///
/// Construction guarantees only that the induced map on pairs is a
/// bijection; the solution axioms are separate queries so that defective
/// tables can be loaded and diagnosed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionTable {
    n: usize,
    table: Vec<(usize, usize)>,
}

/// Outcome of the R-matrix checks; `R = α ∘ S` with `α` the flip map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QybeReport {
    /// `R¹²R¹³R²³ = R²³R¹³R¹²` holds on all triples.
    pub qybe: bool,
    /// `R²¹R = id` holds on all pairs.
    pub unitary: bool,
}

impl SolutionTable {
    /// Build a table from `S(x, y)`, verifying that all entries are in
    /// range and that the map on pairs is a bijection.
    pub fn from_fn(n: usize, s: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let mut table = Vec::with_capacity(n * n);
        let mut seen = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = s(x, y);
                if u >= n || v >= n {
                    return Err(Error::Document(format!(
                        "S({}, {}) = ({}, {}) is out of range 1..={n}",
                        x + 1,
                        y + 1,
                        u + 1,
                        v + 1
                    )));
                }
                if seen[u * n + v] {
                    return Err(Error::NotPairBijection(u + 1, v + 1));
                }
                seen[u * n + v] = true;
                table.push((u, v));
            }
        }
        Ok(Self { n, table })
    }

    /// The permutation map `S(x, y) = (y, x)`.
    pub fn trivial(n: usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push((y, x));
            }
        }
        Self { n, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.n + y]
    }

    /// `g_x(y)`, the first coordinate of `S(x, y)`.
    pub fn g_image(&self, x: usize, y: usize) -> usize {
        self.s(x, y).0
    }

    /// `f_y(x)`, the second coordinate of `S(x, y)`.
    pub fn f_image(&self, y: usize, x: usize) -> usize {
        self.s(x, y).1
    }

    /// Row map `g_x` as a permutation, if it is one.
    pub fn g_perm(&self, x: usize) -> Result<Permutation> {
        Permutation::new((0..self.n).map(|y| self.g_image(x, y)).collect(), "g", x + 1)
    }

    /// Column map `f_y` as a permutation, if it is one.
    pub fn f_perm(&self, y: usize) -> Result<Permutation> {
        Permutation::new((0..self.n).map(|x| self.f_image(y, x)).collect(), "f", y + 1)
    }

    /// Every `g_x` and every `f_y` is a bijection.
    pub fn is_nondegenerate(&self) -> bool {
        (0..self.n).all(|i| self.g_perm(i).is_ok() && self.f_perm(i).is_ok())
    }

    /// `S ∘ S = id` on all pairs.
    pub fn is_involutive(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                let (u, v) = self.s(x, y);
                self.s(u, v) == (x, y)
            })
        })
    }

    fn s12(&self, t: (usize, usize, usize)) -> (usize, usize, usize) {
        let (a, b) = self.s(t.0, t.1);
        (a, b, t.2)
    }

    fn s23(&self, t: (usize, usize, usize)) -> (usize, usize, usize) {
        let (b, c) = self.s(t.1, t.2);
        (t.0, b, c)
    }

    /// `S¹²S²³S¹² = S²³S¹²S²³` on all n³ triples.
    pub fn is_braided(&self) -> bool {
        self.triples()
            .all(|t| self.s12(self.s23(self.s12(t))) == self.s23(self.s12(self.s23(t))))
    }

    /// Involutive and braided.
    pub fn is_symmetric(&self) -> bool {
        self.is_involutive() && self.is_braided()
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
    }

    fn r(&self, x: usize, y: usize) -> (usize, usize) {
        let (u, v) = self.s(x, y);
        (v, u)
    }

    /// Check the Yang-Baxter equation and the unitary condition for the
    /// R-matrix `R = α ∘ S` directly on index triples and pairs.
    pub fn check_qybe(&self) -> QybeReport {
        let r12 = |t: (usize, usize, usize)| {
            let (a, b) = self.r(t.0, t.1);
            (a, b, t.2)
        };
        let r13 = |t: (usize, usize, usize)| {
            let (a, c) = self.r(t.0, t.2);
            (a, t.1, c)
        };
        let r23 = |t: (usize, usize, usize)| {
            let (b, c) = self.r(t.1, t.2);
            (t.0, b, c)
        };
        let qybe = self
            .triples()
            .all(|t| r12(r13(r23(t))) == r23(r13(r12(t))));
        // R²¹ = flip ∘ R ∘ flip
        let r21 = |(a, b): (usize, usize)| {
            let (u, v) = self.r(b, a);
            (v, u)
        };
        let unitary = (0..self.n)
            .all(|x| (0..self.n).all(|y| r21(self.r(x, y)) == (x, y)));
        QybeReport { qybe, unitary }
    }

    /// `S(x, x) = (x, x)` for every `x`.
    pub fn is_square_free(&self) -> bool {
        (0..self.n).all(|x| self.s(x, x) == (x, x))
    }

    /// Error unless the table is a symmetric, non-degenerate solution.
    pub fn require_valid(&self) -> Result<()> {
        if !self.is_nondegenerate() {
            return Err(Error::Precondition("solution is degenerate".into()));
        }
        if !self.is_involutive() {
            return Err(Error::Precondition("solution is not involutive".into()));
        }
        if !self.is_braided() {
            return Err(Error::Precondition("solution is not braided".into()));
        }
        Ok(())
    }

    fn is_invariant_mask(&self, m: Mask) -> bool {
        for x in mask::elements(m) {
            for y in mask::elements(m) {
                let (u, v) = self.s(x, y);
                if !mask::contains(m, u) || !mask::contains(m, v) {
                    return false;
                }
            }
        }
        true
    }

    /// All non-empty invariant subsets `Y` (those with `S(Y×Y) ⊆ Y×Y`),
    /// ordered by size then lexicographically. `X` itself is always last.
    ///
    /// Finiteness makes every invariant subset non-degenerate; this is
    /// asserted on each subset rather than assumed.
    pub fn invariant_subsets(&self) -> Result<Vec<Mask>> {
        self.require_valid()?;
        if self.n > mask::MAX_SET_SIZE {
            return Err(Error::Unsupported(format!(
                "invariant-subset enumeration is limited to n <= {}",
                mask::MAX_SET_SIZE
            )));
        }
        let mut out: Vec<Mask> = (1..=mask::full(self.n))
            .filter(|&m| self.is_invariant_mask(m))
            .collect();
        out.sort_by(|&a, &b| mask::cmp_size_lex(a, b));
        for &m in &out {
            let sub = self.restrict(m)?;
            if !(sub.is_nondegenerate() && sub.is_symmetric()) {
                return Err(Error::Theorem(format!(
                    "invariant subset {} is degenerate, contradicting finiteness",
                    mask::display(m)
                )));
            }
        }
        Ok(out)
    }

    /// The re-indexed solution on an invariant subset.
    pub fn restrict(&self, m: Mask) -> Result<SolutionTable> {
        if !self.is_invariant_mask(m) {
            return Err(Error::NotInvariant(
                mask::elements(m).iter().map(|i| i + 1).collect(),
            ));
        }
        let elems = mask::elements(m);
        let mut index_of = vec![usize::MAX; self.n];
        for (k, &e) in elems.iter().enumerate() {
            index_of[e] = k;
        }
        SolutionTable::from_fn(elems.len(), |a, b| {
            let (u, v) = self.s(elems[a], elems[b]);
            (index_of[u], index_of[v])
        })
    }

    /// The `n(n-1)/2` non-trivial defining relations `xy = g_x(y) f_y(x)`.
    pub fn presentation(&self) -> Result<RelationSet> {
        self.require_valid()?;
        let mut relations = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let (u, v) = self.s(x, y);
                if (u, v) == (x, y) {
                    continue;
                }
                // Each relation arises from both of its sides; keep the
                // lexicographically smaller side as the left-hand one.
                if (x, y) <= (u, v) {
                    relations.push(((x, y), (u, v)));
                }
            }
        }
        relations.sort_unstable();
        RelationSet::new(self.n, relations)
    }

    /// A permutation `φ` with `S2(φx, φy) = (φu, φv)` whenever
    /// `S(x, y) = (u, v)`, if the two tables are isomorphic.
    pub fn isomorphic_to(&self, other: &SolutionTable) -> Option<Permutation> {
        iso::search(self, other)
    }
}

/// One relation `x_i x_j = x_k x_l`, as a pair of 2-letter sides.
pub type Relation = ((usize, usize), (usize, usize));

/// A set of quadratic relations over `{1..n}`, each stored with its
/// lexicographically smaller side first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    n: usize,
    relations: Vec<Relation>,
}

impl RelationSet {
    /// Validate the structural conditions for a solution presentation:
    /// exactly `n(n-1)/2` relations, and no 2-letter word occurs twice.
    pub fn new(n: usize, mut relations: Vec<Relation>) -> Result<Self> {
        for r in &mut relations {
            if r.1 < r.0 {
                std::mem::swap(&mut r.0, &mut r.1);
            }
        }
        relations.sort_unstable();
        let expected = n * (n - 1) / 2;
        if relations.len() != expected {
            return Err(Error::RelationSet(format!(
                "expected {expected} relations for n = {n}, got {}",
                relations.len()
            )));
        }
        let mut seen = vec![false; n * n];
        for &((a, b), (c, d)) in &relations {
            for (x, y) in [(a, b), (c, d)] {
                if x >= n || y >= n {
                    return Err(Error::RelationSet(format!(
                        "letter out of range in relation x{}x{} = x{}x{}",
                        a + 1,
                        b + 1,
                        c + 1,
                        d + 1
                    )));
                }
                if seen[x * n + y] {
                    return Err(Error::RelationSet(format!(
                        "word x{}x{} occurs in more than one relation side",
                        x + 1,
                        y + 1
                    )));
                }
                seen[x * n + y] = true;
            }
        }
        Ok(Self { n, relations })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Reconstruct the solution table: each relation fixes two cells of
    /// `S`, and every unmatched pair is a fixed point. The result must
    /// pass the solution axioms.
    pub fn to_solution(&self) -> Result<SolutionTable> {
        let n = self.n;
        let mut cells: Vec<Option<(usize, usize)>> = vec![None; n * n];
        for &((a, b), (c, d)) in &self.relations {
            for ((x, y), (u, v)) in [((a, b), (c, d)), ((c, d), (a, b))] {
                if cells[x * n + y].is_some() {
                    return Err(Error::RelationSet(format!(
                        "word x{}x{} determined twice",
                        x + 1,
                        y + 1
                    )));
                }
                cells[x * n + y] = Some((u, v));
            }
        }
        // Unmatched pairs are S-fixed: forced by involutivity and the
        // uniqueness of fixed pairs.
        let table = SolutionTable::from_fn(n, |x, y| cells[x * n + y].unwrap_or((x, y)))?;
        if !table.is_nondegenerate() {
            return Err(Error::RelationSet(
                "induced table is degenerate; not a solution presentation".into(),
            ));
        }
        if !table.is_symmetric() {
            return Err(Error::RelationSet(
                "induced table is not a symmetric solution".into(),
            ));
        }
        Ok(table)
    }

    /// Stable text rendering, one relation per line, `x1 x2 = x3 x4`.
    pub fn render_text(&self) -> String {
        self.relations
            .iter()
            .map(|&((a, b), (c, d))| {
                format!("x{} x{} = x{} x{}", a + 1, b + 1, c + 1, d + 1)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

mod iso {
    //! Backtracking isomorphism search with invariant-vector pruning.

    use super::SolutionTable;
    use crate::perm::Permutation;

    /// Per-element relabeling invariant; candidates must match exactly.
    fn profile(s: &SolutionTable, x: usize) -> Vec<usize> {
        let n = s.n();
        let mut p = vec![
            usize::from(s.s(x, x) == (x, x)),
            (0..n).filter(|&y| s.s(x, y) == (x, y)).count(),
            (0..n).filter(|&y| s.s(y, x) == (y, x)).count(),
        ];
        if let Ok(g) = s.g_perm(x) {
            p.extend(g.cycle_type());
        }
        p.push(usize::MAX); // separator
        if let Ok(f) = s.f_perm(x) {
            p.extend(f.cycle_type());
        }
        p
    }

    pub fn search(a: &SolutionTable, b: &SolutionTable) -> Option<Permutation> {
        if a.n() != b.n() {
            return None;
        }
        let n = a.n();
        let pa: Vec<_> = (0..n).map(|x| profile(a, x)).collect();
        let pb: Vec<_> = (0..n).map(|x| profile(b, x)).collect();
        {
            let mut ma = pa.clone();
            let mut mb = pb.clone();
            ma.sort();
            mb.sort();
            if ma != mb {
                return None;
            }
        }
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if assign(a, b, &pa, &pb, &mut phi, &mut used, 0) {
            Some(Permutation::from_images_unchecked(phi))
        } else {
            None
        }
    }

    /// Transport consistency over all pairs whose images are decided.
    fn consistent(a: &SolutionTable, b: &SolutionTable, phi: &[usize], x: usize) -> bool {
        let decided: Vec<usize> = (0..a.n()).filter(|&i| phi[i] != usize::MAX).collect();
        for &y in &decided {
            for (p, q) in [(x, y), (y, x)] {
                let (u, v) = a.s(p, q);
                if phi[u] == usize::MAX || phi[v] == usize::MAX {
                    continue;
                }
                if b.s(phi[p], phi[q]) != (phi[u], phi[v]) {
                    return false;
                }
            }
        }
        true
    }

    fn assign(
        a: &SolutionTable,
        b: &SolutionTable,
        pa: &[Vec<usize>],
        pb: &[Vec<usize>],
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        if x == a.n() {
            return true;
        }
        for cand in 0..a.n() {
            if used[cand] || pa[x] != pb[cand] {
                continue;
            }
            phi[x] = cand;
            used[cand] = true;
            if consistent(a, b, phi, x) && assign(a, b, pa, pb, phi, used, x + 1) {
                return true;
            }
            phi[x] = usize::MAX;
            used[cand] = false;
        }
        false
    }
}

/// Verify that `phi` transports `a` to `b` pointwise.
pub fn is_iso_witness(a: &SolutionTable, b: &SolutionTable, phi: &Permutation) -> bool {
    if a.n() != b.n() || phi.len() != a.n() {
        return false;
    }
    (0..a.n()).all(|x| {
        (0..a.n()).all(|y| {
            let (u, v) = a.s(x, y);
            b.s(phi.apply(x), phi.apply(y)) == (phi.apply(u), phi.apply(v))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_is_symmetric() {
        for n in 1..=4 {
            let s = SolutionTable::trivial(n);
            assert!(s.is_nondegenerate());
            assert!(s.is_symmetric());
            assert!(s.is_square_free());
            let rep = s.check_qybe();
            assert!(rep.qybe && rep.unitary);
        }
    }

    #[test]
    fn trivial_table_values() {
        let s = SolutionTable::trivial(2);
        assert_eq!(s.s(0, 1), (1, 0));
        let s1 = SolutionTable::trivial(1);
        assert_eq!(s1.s(0, 0), (0, 0));
    }

    #[test]
    fn pair_bijection_enforced() {
        // two cells mapping to the same pair
        let err = SolutionTable::from_fn(2, |_, _| (0, 1)).unwrap_err();
        assert!(matches!(err, Error::NotPairBijection(1, 2)));
    }

    #[test]
    fn constant_row_is_degenerate() {
        // swap-like table with g_1 made constant; pair-bijectivity is kept
        // by hand-picking images.
        let t = SolutionTable::from_fn(3, |x, y| match (x, y) {
            (0, 0) => (0, 0),
            (0, 1) => (0, 1),
            (0, 2) => (0, 2),
            (1, 0) => (1, 0),
            (1, 1) => (1, 1),
            (1, 2) => (1, 2),
            (2, 0) => (2, 0),
            (2, 1) => (2, 1),
            _ => (2, 2),
        })
        .unwrap();
        assert!(!t.is_nondegenerate());
    }

    #[test]
    fn cyclic_orbit_is_not_involutive() {
        // S cycles (0,0) -> (1,1) -> (2,2) -> (0,0) and fixes the rest.
        let t = SolutionTable::from_fn(3, |x, y| {
            if x == y {
                ((x + 1) % 3, (x + 1) % 3)
            } else {
                (x, y)
            }
        })
        .unwrap();
        assert!(!t.is_involutive());
        assert!(!t.is_symmetric());
    }

    #[test]
    fn qybe_tracks_braidedness_on_fixtures() {
        for s in [
            fixtures::two_orbit_five(),
            fixtures::delta_pure_four(),
            SolutionTable::trivial(3),
        ] {
            let rep = s.check_qybe();
            assert_eq!(rep.qybe, s.is_braided());
            assert_eq!(rep.qybe && rep.unitary, s.is_symmetric());
        }
    }

    #[test]
    fn perturbed_table_fails_braid_and_qybe() {
        let s = fixtures::delta_pure_four();
        // swap the images of two non-fixed cells
        let t = SolutionTable::from_fn(4, |x, y| {
            if (x, y) == (0, 1) {
                s.s(0, 2)
            } else if (x, y) == (0, 2) {
                s.s(0, 1)
            } else {
                s.s(x, y)
            }
        })
        .unwrap();
        assert!(!t.is_braided());
        assert!(!t.check_qybe().qybe);
    }

    #[test]
    fn invariant_subsets_of_trivial() {
        let s = SolutionTable::trivial(3);
        let subs = s.invariant_subsets().unwrap();
        assert_eq!(subs.len(), 7);
        assert_eq!(*subs.last().unwrap(), mask::full(3));
    }

    #[test]
    fn unique_fixed_partner_per_row() {
        for s in [fixtures::two_orbit_five(), fixtures::delta_pure_four()] {
            for x in 0..s.n() {
                let fixed = (0..s.n()).filter(|&y| s.s(x, y) == (x, y)).count();
                assert_eq!(fixed, 1);
            }
        }
    }

    #[test]
    fn presentation_roundtrip() {
        for s in [
            fixtures::two_orbit_five(),
            fixtures::delta_pure_four(),
            SolutionTable::trivial(4),
        ] {
            let rs = s.presentation().unwrap();
            assert_eq!(rs.relations().len(), s.n() * (s.n() - 1) / 2);
            let back = rs.to_solution().unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn commutation_presentation_gives_trivial() {
        let rs = RelationSet::new(2, vec![((0, 1), (1, 0))]).unwrap();
        assert_eq!(rs.to_solution().unwrap(), SolutionTable::trivial(2));
    }

    #[test]
    fn relation_set_conditions_enforced() {
        // wrong count
        assert!(RelationSet::new(3, vec![((0, 1), (1, 0))]).is_err());
        // duplicated word across relations
        assert!(RelationSet::new(
            3,
            vec![((0, 1), (1, 0)), ((0, 1), (2, 2)), ((0, 2), (2, 0))]
        )
        .is_err());
    }

    #[test]
    fn restrict_to_whole_set_is_identity() {
        let s = fixtures::two_orbit_five();
        assert_eq!(s.restrict(mask::full(5)).unwrap(), s);
    }

    #[test]
    fn restrict_rejects_non_invariant() {
        let s = fixtures::two_orbit_five();
        assert!(s.restrict(mask::from_elements([0])).is_err());
    }

    #[test]
    fn iso_finds_relabeling_witness() {
        let s = fixtures::two_orbit_five();
        // relabel by the transposition (1 5)
        let phi = Permutation::new(vec![4, 1, 2, 3, 0], "phi", 0).unwrap();
        let relabeled = SolutionTable::from_fn(5, |x, y| {
            let inv = phi.inverse();
            let (u, v) = s.s(inv.apply(x), inv.apply(y));
            (phi.apply(u), phi.apply(v))
        })
        .unwrap();
        let w = s.isomorphic_to(&relabeled).expect("isomorphic");
        assert!(is_iso_witness(&s, &relabeled, &w));
    }

    #[test]
    fn iso_search_agrees_with_full_permutation_scan() {
        // pruning must never change the yes/no answer
        let census = crate::census::enumerate_solutions(3, true).unwrap();
        for a in &census.classes {
            for b in &census.classes {
                let brute = crate::perm::all_permutations(3)
                    .into_iter()
                    .any(|phi| is_iso_witness(a, b, &phi));
                assert_eq!(a.isomorphic_to(b).is_some(), brute);
            }
        }
    }

    #[test]
    fn iso_distinguishes_structure_and_size() {
        let four = fixtures::delta_pure_four();
        assert!(four.isomorphic_to(&SolutionTable::trivial(4)).is_none());
        assert!(SolutionTable::trivial(2)
            .isomorphic_to(&SolutionTable::trivial(3))
            .is_none());
    }
}
