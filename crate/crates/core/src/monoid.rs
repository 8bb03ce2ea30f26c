//! The same-orbits equivalence on `S_n`, the absorbing product `*`, and the
//! commutative monoid of orbit partitions it induces.
//!
//! A class `[σ]` is stored as its set of nontrivial orbits. `class_star`
//! merges intersecting orbits with a union-find; the permutation-level
//! `star_apply` / `star_fold` path is kept as an independent realization of
//! the same product and the two are cross-checked in tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::permgroup::{BasisIndexPair, Permutation};

/// Canonical representative of a class in `S_n/∼`: disjoint orbits of size
/// at least two, each sorted, ordered by minimum letter. Letters in no orbit
/// are fixed points. The empty partition is the class of the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitPartition {
    n: usize,
    orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn empty(n: usize) -> Self {
        Self { n, orbits: Vec::new() }
    }

    pub fn from_orbits<I>(n: usize, orbits: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut used = vec![false; n];
        let mut out = Vec::new();
        for mut orbit in orbits {
            if orbit.len() < 2 {
                return Err(Error::InvalidSpec(format!("orbit {orbit:?} has fewer than two letters")));
            }
            orbit.sort_unstable();
            for &letter in &orbit {
                if letter == 0 || letter > n {
                    return Err(Error::LetterOutOfRange { letter, n });
                }
                if std::mem::replace(&mut used[letter - 1], true) {
                    return Err(Error::InvalidSpec(format!("letter {letter} in two orbits")));
                }
            }
            out.push(orbit);
        }
        out.sort_unstable_by_key(|o| o[0]);
        Ok(Self { n, orbits: out })
    }

    /// Keeps the blocks of size >= 2 of an arbitrary partition of `{1,…,n}`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_orbits(n, blocks.into_iter().filter(|b| b.len() >= 2))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        let mut moved = vec![false; self.n];
        for &l in self.orbits.iter().flatten() {
            moved[l - 1] = true;
        }
        (1..=self.n).filter(|&l| !moved[l - 1]).collect()
    }

    pub fn orbit_of(&self, letter: usize) -> Option<&[usize]> {
        self.orbits.iter().find(|o| o.binary_search(&letter).is_ok()).map(Vec::as_slice)
    }

    /// Both letters of the pair lie in one orbit.
    pub fn absorbs(&self, pair: BasisIndexPair) -> bool {
        self.orbit_of(pair.i()).is_some_and(|o| o.binary_search(&pair.j()).is_ok())
    }

    /// Every block including singletons, ordered by minimum letter.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = self.orbits.clone();
        blocks.extend(self.fixed_points().into_iter().map(|l| vec![l]));
        blocks.sort_unstable_by_key(|b| b[0]);
        blocks
    }

    /// Parses `{1,2,3}{4,5}`; `{}` is the identity class.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut orbits = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Parse(format!("expected `{{` in `{text}`")))?;
            let close = inner
                .find('}')
                .ok_or_else(|| Error::Parse(format!("unclosed orbit in `{text}`")))?;
            let letters = inner[..close]
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            if !letters.is_empty() {
                orbits.push(letters);
            }
            rest = inner[close + 1..].trim_start();
        }
        Self::from_orbits(n, orbits)
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbits.is_empty() {
            return f.write_str("{}");
        }
        for orbit in &self.orbits {
            let body: Vec<String> = orbit.iter().map(|l| l.to_string()).collect();
            write!(f, "{{{}}}", body.join(","))?;
        }
        Ok(())
    }
}

/// Disjoint sets over letters `1..=n` with path compression and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn root(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// 1-based find.
    pub fn find(&mut self, letter: usize) -> usize {
        self.root(letter - 1) + 1
    }

    /// 1-based union. Returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.root(a - 1), self.root(b - 1));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// All blocks, singletons included, each sorted and ordered by minimum.
    pub fn blocks(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.root(x);
            by_root[r].push(x + 1);
        }
        let mut blocks: Vec<Vec<usize>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        blocks
    }
}

/// `[σ]`: the nontrivial orbits of σ.
pub fn class_of(sigma: &Permutation) -> OrbitPartition {
    sigma.nontrivial_orbits()
}

/// `π * τ` for a transposition τ: absorbed when both swapped letters already
/// share an orbit of π, otherwise the ordinary product `π·τ`.
pub fn star_apply(pi: &Permutation, tau: &Permutation) -> Result<Permutation> {
    let pair = tau.as_transposition().ok_or(Error::NotATransposition)?;
    if pi.n() != tau.n() {
        return Err(Error::SizeMismatch { left: pi.n(), right: tau.n() });
    }
    if class_of(pi).absorbs(pair) {
        Ok(pi.clone())
    } else {
        pi.compose(tau)
    }
}

/// Left fold of [`star_apply`] over the transpositions named by `pairs`,
/// starting from the identity.
pub fn star_fold(pairs: &[BasisIndexPair], n: usize) -> Result<Permutation> {
    pairs.iter().try_fold(Permutation::identity(n), |acc, &p| {
        star_apply(&acc, &Permutation::transposition(n, p)?)
    })
}

/// Permutation-level `σ * η`: η is expanded into transpositions which are
/// absorbed into σ one at a time.
pub fn star(sigma: &Permutation, eta: &Permutation) -> Result<Permutation> {
    if sigma.n() != eta.n() {
        return Err(Error::SizeMismatch { left: sigma.n(), right: eta.n() });
    }
    let n = sigma.n();
    eta.transposition_decomposition().into_iter().try_fold(sigma.clone(), |acc, p| {
        star_apply(&acc, &Permutation::transposition(n, p)?)
    })
}

/// `[a] * [b]`: pool both orbit collections and merge any that intersect.
pub fn class_star(a: &OrbitPartition, b: &OrbitPartition) -> Result<OrbitPartition> {
    if a.n != b.n {
        return Err(Error::SizeMismatch { left: a.n, right: b.n });
    }
    let mut sets = DisjointSets::new(a.n);
    for orbit in a.orbits.iter().chain(&b.orbits) {
        for w in orbit.windows(2) {
            sets.union(w[0], w[1]);
        }
    }
    OrbitPartition::from_blocks(a.n, sets.blocks())
}

/// `ι̃`: the class of any ordering of `pairs` under `*`. Order-independent.
pub fn iota_tilde<'a, I>(pairs: I, n: usize) -> Result<OrbitPartition>
where
    I: IntoIterator<Item = &'a BasisIndexPair>,
{
    pairs.into_iter().try_fold(OrbitPartition::empty(n), |acc, p| {
        p.check_range(n)?;
        class_star(&acc, &OrbitPartition::from_orbits(n, [vec![p.i(), p.j()]])?)
    })
}

/// `p = [(1,…,n)]`.
pub fn is_full_cycle_class(p: &OrbitPartition) -> bool {
    p.n >= 2 && p.orbits.len() == 1 && p.orbits[0].len() == p.n
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(i: usize, j: usize) -> BasisIndexPair {
        BasisIndexPair::new(i, j).unwrap()
    }

    fn cyc(n: usize, text: &str) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn part(n: usize, text: &str) -> OrbitPartition {
        OrbitPartition::parse(text, n).unwrap()
    }

    #[test]
    fn class_of_examples() {
        assert_eq!(class_of(&cyc(3, "(1 3 2)")), class_of(&cyc(3, "(1 2 3)")));
        assert_eq!(class_of(&cyc(3, "(1 2 3)")), part(3, "{1,2,3}"));
        assert!(class_of(&Permutation::identity(4)).is_empty());
        assert_eq!(class_of(&cyc(4, "(1 2)(3 4)")), part(4, "{1,2}{3,4}"));
    }

    #[test]
    fn star_apply_cases() {
        let c = cyc(4, "(1 2 3)");
        assert_eq!(star_apply(&c, &cyc(4, "(1 3)")).unwrap(), c);
        let ext = star_apply(&c, &cyc(4, "(3 4)")).unwrap();
        assert!(ext.is_k_cycle(4));
        assert_eq!(star_apply(&Permutation::identity(4), &cyc(4, "(1 2)")).unwrap(), cyc(4, "(1 2)"));
        assert_eq!(star_apply(&c, &cyc(4, "(1 2 3)")), Err(Error::NotATransposition));
    }

    #[test]
    fn star_fold_examples() {
        let p = star_fold(&[pair(1, 2), pair(2, 3), pair(1, 3), pair(3, 4)], 4).unwrap();
        assert_eq!(class_of(&p), part(4, "{1,2,3,4}"));
        let q = star_fold(&[pair(1, 2), pair(2, 3), pair(3, 4), pair(4, 5)], 5).unwrap();
        assert_eq!(class_of(&q), part(5, "{1,2,3,4,5}"));
        assert_eq!(star_fold(&[pair(1, 2), pair(1, 2)], 2).unwrap(), cyc(2, "(1 2)"));
    }

    #[test]
    fn class_star_examples() {
        assert_eq!(class_star(&part(4, "{1,2,3}"), &part(4, "{1,3}")).unwrap(), part(4, "{1,2,3}"));
        assert_eq!(class_star(&part(4, "{1,2}"), &part(4, "{3,4}")).unwrap(), part(4, "{1,2}{3,4}"));
        assert!(class_star(&part(3, "{1,2}"), &part(4, "{1,2}")).is_err());
    }

    #[test]
    fn class_star_against_explicit_decomposition() {
        // Oracle: star_fold over explicit transposition lists for each operand.
        let a = [pair(1, 2), pair(2, 3)];
        let b = [pair(3, 4), pair(5, 6)];
        let expected = class_of(&star_fold(&[&a[..], &b[..]].concat(), 6).unwrap());
        assert_eq!(expected, part(6, "{1,2,3,4}{5,6}"));
        let got = class_star(&part(6, "{1,2,3}"), &part(6, "{3,4}{5,6}")).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn iota_tilde_examples() {
        let f = [pair(1, 2), pair(2, 3), pair(1, 3), pair(3, 4)];
        assert_eq!(iota_tilde(&f, 4).unwrap(), part(4, "{1,2,3,4}"));
        assert_eq!(iota_tilde(&[pair(1, 2), pair(2, 3), pair(4, 5)], 5).unwrap(), part(5, "{1,2,3}{4,5}"));
        assert!(iota_tilde(&[], 4).unwrap().is_empty());
        assert!(iota_tilde(&[pair(1, 5)], 4).is_err());
    }

    #[test]
    fn full_cycle_class() {
        assert!(is_full_cycle_class(&part(4, "{1,2,3,4}")));
        assert!(!is_full_cycle_class(&part(5, "{1,2,3}{4,5}")));
        assert!(!is_full_cycle_class(&OrbitPartition::empty(3)));
    }

    #[test]
    fn partition_text_format() {
        assert_eq!(OrbitPartition::empty(3).to_string(), "{}");
        assert_eq!(part(5, "{5,4}{3,1,2}").to_string(), "{1,2,3}{4,5}");
        assert!(OrbitPartition::parse("{1}", 3).is_err());
        assert!(OrbitPartition::parse("{1,2}{2,3}", 3).is_err());
        assert!(OrbitPartition::parse("{1,4}", 3).is_err());
        assert!(OrbitPartition::parse("1,2", 3).is_err());
        assert_eq!(part(5, "{1,2}").fixed_points(), vec![3, 4, 5]);
        assert_eq!(part(4, "{2,4}").blocks(), vec![vec![1], vec![2, 4], vec![3]]);
    }

    fn arb_pairs(n: usize, max: usize) -> impl Strategy<Value = Vec<BasisIndexPair>> {
        proptest::collection::vec((1..=n, 1..=n), 0..max).prop_map(|v| {
            v.into_iter().filter_map(|(a, b)| BasisIndexPair::unordered(a, b).ok()).collect()
        })
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn iota_tilde_is_order_invariant(pairs in arb_pairs(7, 10), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let reference = iota_tilde(&pairs, 7).unwrap();
            let mut shuffled = pairs.clone();
            for _ in 0..20 {
                shuffled.shuffle(&mut rng);
                prop_assert_eq!(class_of(&star_fold(&shuffled, 7).unwrap()), reference.clone());
            }
            prop_assert_eq!(reference.is_empty(), pairs.is_empty());
        }

        #[test]
        fn star_laws(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            let ab = class_of(&star(&a, &b).unwrap());
            prop_assert_eq!(&ab, &class_of(&star(&b, &a).unwrap()));
            let left = class_of(&star(&star(&a, &b).unwrap(), &c).unwrap());
            let right = class_of(&star(&a, &star(&b, &c).unwrap()).unwrap());
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(&ab, &class_star(&class_of(&a), &class_of(&b)).unwrap());
            let e = OrbitPartition::empty(7);
            prop_assert_eq!(class_star(&class_of(&a), &e).unwrap(), class_of(&a));
        }
    }
}
