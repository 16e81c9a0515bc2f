//! Finite groups from Cayley tables, bundled presets, brute-force
//! subgroup/normality oracles, and the group-algebra constructions.
//!
//! Groups are raw multiplication tables; presets are generated
//! programmatically and re-verified at load. Subgroups are element bitmasks
//! (orders are capped at 64), which keeps the brute-force oracle simple.

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};
use crate::hopf::HopfAlgebra;

/// A finite group given by its Cayley table. `table[i][j]` is the index of
/// the product of elements `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validate a Cayley table: Latin square, two-sided identity, inverses,
    /// and associativity on all triples.
    pub fn new(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty Cayley table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "Cayley table row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidInput(format!(
                        "Cayley table entry ({i},{j}) = {v} out of range"
                    )));
                }
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::InvalidInput(format!(
                    "{} names for {n} elements",
                    names.len()
                )));
            }
        }
        // Latin square.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if seen_row[table[i][j]] {
                    return Err(Error::InvalidInput(format!(
                        "row {i} repeats element {}",
                        table[i][j]
                    )));
                }
                seen_row[table[i][j]] = true;
                if seen_col[table[j][i]] {
                    return Err(Error::InvalidInput(format!(
                        "column {i} repeats element {}",
                        table[j][i]
                    )));
                }
                seen_col[table[j][i]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| Error::InvalidInput("no two-sided identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element {i} has no inverse")))?;
            inverse[i] = inv;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
            names,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Direct product; element `(i, a)` lands at index `i·|H| + a`, matching
    /// the Kronecker convention of the tensor-product Hopf algebra.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let mut table = vec![vec![0usize; n * m]; n * m];
        for i in 0..n {
            for a in 0..m {
                for j in 0..n {
                    for b in 0..m {
                        table[i * m + a][j * m + b] = self.table[i][j] * m + other.table[a][b];
                    }
                }
            }
        }
        FiniteGroup::new(table, None).expect("direct product of valid groups is valid")
    }

    // -------------------------------------------------------------------
    // Brute-force oracles (orders ≤ 64; subgroups are element bitmasks).
    // -------------------------------------------------------------------

    fn closure_mask(&self, seed: u64) -> u64 {
        let mut mask = seed | (1u64 << self.identity);
        loop {
            let mut next = mask;
            for i in 0..self.order {
                if mask >> i & 1 == 0 {
                    continue;
                }
                for j in 0..self.order {
                    if mask >> j & 1 == 1 {
                        next |= 1u64 << self.table[i][j];
                    }
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    fn mask_to_elems(mask: u64, order: usize) -> Vec<usize> {
        (0..order).filter(|&i| mask >> i & 1 == 1).collect()
    }

    /// Every subgroup, as sorted element lists, ordered by size then
    /// lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        assert!(self.order <= 64, "subgroup enumeration capped at order 64");
        let trivial = 1u64 << self.identity;
        let mut known = vec![trivial];
        let mut frontier = vec![trivial];
        while let Some(s) = frontier.pop() {
            for g in 0..self.order {
                if s >> g & 1 == 1 {
                    continue;
                }
                let t = self.closure_mask(s | (1u64 << g));
                if !known.contains(&t) {
                    known.push(t);
                    frontier.push(t);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = known
            .into_iter()
            .map(|m| Self::mask_to_elems(m, self.order))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut mask = 0u64;
        for &e in elems {
            if e >= self.order {
                return false;
            }
            mask |= 1u64 << e;
        }
        self.closure_mask(mask) == mask && mask >> self.identity & 1 == 1
    }

    pub fn is_normal_subgroup(&self, elems: &[usize]) -> bool {
        let mut mask = 0u64;
        for &e in elems {
            mask |= 1u64 << e;
        }
        for g in 0..self.order {
            for &s in elems {
                let conj = self.table[self.table[g][s]][self.inverse[g]];
                if mask >> conj & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        self.subgroups()
            .into_iter()
            .filter(|s| self.is_normal_subgroup(s))
            .collect()
    }

    /// Minimal normal subgroups: minimal among nontrivial normal subgroups.
    pub fn minimal_normal_subgroups(&self) -> Vec<Vec<usize>> {
        let normals = self.normal_subgroups();
        let nontrivial: Vec<&Vec<usize>> = normals.iter().filter(|s| s.len() > 1).collect();
        nontrivial
            .iter()
            .filter(|s| {
                !nontrivial
                    .iter()
                    .any(|t| t.len() < s.len() && t.iter().all(|e| s.contains(e)))
            })
            .map(|s| (*s).clone())
            .collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..self.order {
                let c = self.table[self.table[g][x]][self.inverse[g]];
                if !seen[c] {
                    seen[c] = true;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        classes
    }

    pub fn center_elements(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.table[z][g] == self.table[g][z]))
            .collect()
    }
}

/// Everything the brute-force oracle knows about a group.
#[derive(Clone, Debug)]
pub struct SubgroupOracle {
    pub subgroups: Vec<Vec<usize>>,
    pub normal_subgroups: Vec<Vec<usize>>,
    pub minimal_normals: Vec<Vec<usize>>,
    pub conjugacy_classes: Vec<Vec<usize>>,
}

pub fn subgroup_oracle(g: &FiniteGroup) -> SubgroupOracle {
    SubgroupOracle {
        subgroups: g.subgroups(),
        normal_subgroups: g.normal_subgroups(),
        minimal_normals: g.minimal_normal_subgroups(),
        conjugacy_classes: g.conjugacy_classes(),
    }
}

// ---------------------------------------------------------------------------
// Preset groups
// ---------------------------------------------------------------------------

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::new(table, None).expect("cyclic group is valid")
}

/// Dihedral group of order 2n (symmetries of the regular n-gon).
/// Element `i + n·j` is rotation^i · reflection^j.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (r^i s^j)(r^k s^l) = r^(i + k·(-1)^j) s^(j+l)
                    let rot = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
                    let refl = (j + l) % 2;
                    table[i + n * j][k + n * l] = rot + n * refl;
                }
            }
        }
    }
    FiniteGroup::new(table, None).expect("dihedral group is valid")
}

pub fn klein_four() -> FiniteGroup {
    cyclic(2).direct_product(&cyclic(2))
}

pub fn symmetric3() -> FiniteGroup {
    dihedral(3)
}

/// The quaternion group Q8 = {±1, ±i, ±j, ±k}. Index = 2·unit + sign with
/// units ordered (1, i, j, k).
pub fn quaternion8() -> FiniteGroup {
    // Unit multiplication: result unit and sign for units 0..4 = (1, i, j, k).
    const UNIT: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    const SIGN: [[bool; 4]; 4] = [
        [false, false, false, false],
        [false, true, false, true],
        [false, true, true, false],
        [false, false, true, true],
    ];
    let mut table = vec![vec![0usize; 8]; 8];
    for ua in 0..4 {
        for sa in 0..2 {
            for ub in 0..4 {
                for sb in 0..2 {
                    let unit = UNIT[ua][ub];
                    let sign = (sa + sb + usize::from(SIGN[ua][ub])) % 2;
                    table[2 * ua + sa][2 * ub + sb] = 2 * unit + sign;
                }
            }
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::new(table, Some(names)).expect("Q8 table is valid")
}

/// The alternating group A4, generated as permutations of 4 points.
pub fn alternating4() -> FiniteGroup {
    permutation_group(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// Closure of a set of permutation generators, elements in BFS order from
/// the identity.
fn permutation_group(generators: &[Vec<usize>]) -> FiniteGroup {
    let degree = generators[0].len();
    let identity: Vec<usize> = (0..degree).collect();
    let mut elems = vec![identity];
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        let current = elems[idx].clone();
        for g in generators {
            let composed: Vec<usize> = (0..degree).map(|p| g[current[p]]).collect();
            if !elems.contains(&composed) {
                elems.push(composed);
                frontier.push(elems.len() - 1);
            }
        }
    }
    let n = elems.len();
    let mut table = vec![vec![0usize; n]; n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let prod: Vec<usize> = (0..degree).map(|p| a[b[p]]).collect();
            table[i][j] = elems.iter().position(|e| e == &prod).unwrap();
        }
    }
    FiniteGroup::new(table, None).expect("permutation closure is a group")
}

/// Base preset names: C1–C30, Klein4, S3, D4, Q8, A4.
pub fn preset_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=30).map(|n| format!("C{n}")).collect();
    names.extend(["Klein4", "S3", "D4", "Q8", "A4"].map(String::from));
    names
}

/// Look up a preset, allowing direct products written `AxB` (e.g. `C2xC3`,
/// `C2xD4`). Each constituent table is re-verified at load.
pub fn preset(name: &str) -> Option<FiniteGroup> {
    if let Some((left, right)) = name.split_once('x') {
        return Some(preset(left)?.direct_product(&preset(right)?));
    }
    if let Some(num) = name.strip_prefix('C') {
        if let Ok(n) = num.parse::<usize>() {
            if (1..=30).contains(&n) {
                return Some(cyclic(n));
            }
        }
        return None;
    }
    match name {
        "Klein4" => Some(klein_four()),
        "S3" => Some(symmetric3()),
        "D4" => Some(dihedral(4)),
        "Q8" => Some(quaternion8()),
        "A4" => Some(alternating4()),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Group algebras
// ---------------------------------------------------------------------------

/// The group algebra kG: grouplike basis, Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let mult = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, g.mul(i, j), Scalar::one())));
    let comult = (0..n).map(|i| (i, i, i, Scalar::one()));
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        antipode[(g.inv(i), i)] = Scalar::one();
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[g.identity()] = Scalar::one();
    HopfAlgebra::from_tensors(n, mult, unit, comult, vec![Scalar::one(); n], antipode)
        .expect("group algebra construction is well-formed")
}

/// The function algebra k^G on the δ basis: pointwise products, and
/// Δδ_g = Σ_{hk=g} δ_h ⊗ δ_k. Equals `dual(group_algebra(g))` entry-wise.
pub fn dual_group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let mult = (0..n).map(|i| (i, i, i, Scalar::one()));
    let comult = (0..n).flat_map(|i| {
        (0..n).map(move |h| {
            let k = g.mul(g.inv(h), i);
            (i, h, k, Scalar::one())
        })
    });
    let mut counit = vec![Scalar::zero(); n];
    counit[g.identity()] = Scalar::one();
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        antipode[(g.inv(i), i)] = Scalar::one();
    }
    HopfAlgebra::from_tensors(n, mult, vec![Scalar::one(); n], comult, counit, antipode)
        .expect("dual group algebra construction is well-formed")
}

/// The canonical SubHopf of kG attached to a subgroup: the span of the
/// subgroup's indicator coordinates.
pub fn sub_hopf_from_subgroup(
    h: &std::sync::Arc<HopfAlgebra>,
    g: &FiniteGroup,
    elems: &[usize],
) -> Result<crate::subobjects::SubHopf> {
    if !g.is_subgroup(elems) {
        return Err(Error::InvalidInput(format!(
            "{elems:?} is not a subgroup"
        )));
    }
    crate::subobjects::SubHopf::new(h, span_of_elements(g.order(), elems))
}

/// An exact group factorization G = A·B realized inside kG: returns the two
/// subgroup SubHopfs after checking A ∩ B = {e} and |A|·|B| = |G|, and
/// verifies that the multiplication map kA ⊗ kB → kG is bijective.
pub fn exact_group_factorization(
    g: &FiniteGroup,
    a_elems: &[usize],
    b_elems: &[usize],
) -> Result<(
    std::sync::Arc<HopfAlgebra>,
    crate::subobjects::SubHopf,
    crate::subobjects::SubHopf,
)> {
    if !g.is_subgroup(a_elems) {
        return Err(Error::Precondition("A is not a subgroup".into()));
    }
    if !g.is_subgroup(b_elems) {
        return Err(Error::Precondition("B is not a subgroup".into()));
    }
    let common: Vec<usize> = a_elems
        .iter()
        .filter(|e| b_elems.contains(e))
        .copied()
        .collect();
    if common != [g.identity()] {
        return Err(Error::Precondition(format!(
            "A ∩ B = {common:?} is not trivial"
        )));
    }
    if a_elems.len() * b_elems.len() != g.order() {
        return Err(Error::Precondition(format!(
            "|A|·|B| = {}·{} ≠ {}",
            a_elems.len(),
            b_elems.len(),
            g.order()
        )));
    }
    let h = std::sync::Arc::new(group_algebra(g));
    let a = sub_hopf_from_subgroup(&h, g, a_elems)?;
    let b = sub_hopf_from_subgroup(&h, g, b_elems)?;
    crate::structure::is_factorization(&h, &a, &b)?;
    Ok((h, a, b))
}

/// Indicator subspace of kG spanned by a set of group elements.
pub fn span_of_elements(order: usize, elems: &[usize]) -> Subspace {
    let rows: Vec<Vec<Scalar>> = elems
        .iter()
        .map(|&e| {
            let mut v = vec![Scalar::zero(); order];
            v[e] = Scalar::one();
            v
        })
        .collect();
    Subspace::from_vectors(order, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid_groups() {
        for name in preset_names() {
            let g = preset(&name).unwrap();
            assert!(g.order() >= 1, "{name}");
        }
        assert_eq!(preset("C2xC3").unwrap().order(), 6);
        assert!(preset("C31").is_none());
        assert!(preset("nope").is_none());
    }

    #[test]
    fn s3_structure() {
        let s3 = symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.conjugacy_classes().len(), 3);
        let orders: Vec<usize> = s3.normal_subgroups().iter().map(Vec::len).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn d4_structure() {
        let d4 = dihedral(4);
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.center_elements().len(), 2);
        let orders: Vec<usize> = d4.normal_subgroups().iter().map(Vec::len).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn q8_structure() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        // Unique element of order 2: -1 at index 1.
        let order2: Vec<usize> = (0..8)
            .filter(|&i| i != q8.identity() && q8.mul(i, i) == q8.identity())
            .collect();
        assert_eq!(order2, vec![1]);
        let orders: Vec<usize> = q8.normal_subgroups().iter().map(Vec::len).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(q8.minimal_normal_subgroups(), vec![vec![0, 1]]);
    }

    #[test]
    fn a4_structure() {
        let a4 = alternating4();
        assert_eq!(a4.order(), 12);
        let orders: Vec<usize> = a4.normal_subgroups().iter().map(Vec::len).collect();
        assert_eq!(orders, vec![1, 4, 12]);
    }

    #[test]
    fn c6_subgroups_all_normal() {
        let c6 = cyclic(6);
        assert_eq!(c6.subgroups().len(), 4);
        assert_eq!(c6.normal_subgroups().len(), 4);
        let orders: Vec<usize> = c6.normal_subgroups().iter().map(Vec::len).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn group_algebra_basics() {
        // C1 gives the trivial Hopf algebra k.
        let k = group_algebra(&cyclic(1));
        assert_eq!(k.dim(), 1);
        assert!(k.verify_axioms().all_pass());
        // C2: the antipode fixes both basis elements (g⁻¹ = g).
        let c2 = group_algebra(&cyclic(2));
        assert_eq!(c2.antipode_matrix(), &crate::exact::Matrix::identity(2));
        // kS3 is noncommutative and cocommutative.
        let s3 = group_algebra(&symmetric3());
        assert!(s3.verify_axioms().all_pass());
        assert!(!s3.is_commutative());
        assert!(s3.is_cocommutative());
    }

    #[test]
    fn dual_group_algebra_matches_dual() {
        for name in ["C2", "C6", "S3", "Q8"] {
            let g = preset(name).unwrap();
            assert_eq!(
                dual_group_algebra(&g),
                group_algebra(&g).dual(),
                "{name}"
            );
        }
        // Cocommutative iff the group is abelian.
        assert!(dual_group_algebra(&cyclic(6)).is_cocommutative());
        assert!(!dual_group_algebra(&symmetric3()).is_cocommutative());
    }

    #[test]
    fn group_factorizations() {
        // S3 = ⟨r⟩ · ⟨s⟩.
        let s3 = symmetric3();
        let (_, a, b) = exact_group_factorization(&s3, &[0, 1, 2], &[0, 3]).unwrap();
        assert_eq!((a.dim(), b.dim()), (3, 2));
        // C6 = C2 · C3.
        let c6 = cyclic(6);
        exact_group_factorization(&c6, &[0, 3], &[0, 2, 4]).unwrap();
        // D4 = C4 · C2 with a reflection; rotations are 0..4, reflections 4..8.
        let d4 = dihedral(4);
        exact_group_factorization(&d4, &[0, 1, 2, 3], &[0, 4]).unwrap();
        // Violated preconditions are named.
        assert!(matches!(
            exact_group_factorization(&s3, &[0, 1, 2], &[0, 1, 2]),
            Err(crate::error::Error::Precondition(_))
        ));
    }

    #[test]
    fn rejects_bad_tables() {
        // Not a Latin square.
        assert!(FiniteGroup::new(vec![vec![0, 0], vec![1, 1]], None).is_err());
        // A Latin square with identity and inverses that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::new(t, None).is_err());
    }
}
