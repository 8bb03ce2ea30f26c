//! Permutations of `{1,…,n}`: composition, cycle structure, the ordered
//! transposition map `iota`, and breadth-first subgroup closure.
//!
//! Letters are 1-based at every public boundary. Composition applies the
//! right factor first: `(σ·η)(k) = σ(η(k))`, so `(1,2)(2,3) = (1,2,3)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::OrbitPartition;

/// Ordered pair `(i, j)` with `1 <= i < j`, naming a standard basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndexPair {
    i: usize,
    j: usize,
}

impl BasisIndexPair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidPair { i, j });
        }
        Ok(Self { i, j })
    }

    /// Builds the pair from two distinct letters given in either order.
    pub fn unordered(a: usize, b: usize) -> Result<Self> {
        Self::new(a.min(b), a.max(b))
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        if self.j > n {
            return Err(Error::LetterOutOfRange { letter: self.j, n });
        }
        Ok(())
    }

    pub fn touches(&self, letter: usize) -> bool {
        self.i == letter || self.j == letter
    }
}

impl fmt::Display for BasisIndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A bijection of `{1,…,n}`. Stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    /// From one-line notation, 1-based: `images[k-1] = σ(k)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!("image {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation(format!("image {v} repeated")));
            }
            image.push(v - 1);
        }
        Ok(Self { image })
    }

    pub fn transposition(n: usize, pair: BasisIndexPair) -> Result<Self> {
        pair.check_range(n)?;
        let mut p = Self::identity(n);
        p.image.swap(pair.i - 1, pair.j - 1);
        Ok(p)
    }

    /// Product of the given cycles. The cycles must be pairwise disjoint.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &letter in cycle {
                if letter == 0 || letter > n {
                    return Err(Error::LetterOutOfRange { letter, n });
                }
                if std::mem::replace(&mut used[letter - 1], true) {
                    return Err(Error::NotAPermutation(format!("letter {letter} repeated")));
                }
            }
            for (idx, &letter) in cycle.iter().enumerate() {
                let next = cycle[(idx + 1) % cycle.len()];
                image[letter - 1] = next - 1;
            }
        }
        Ok(Self { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `σ(letter)`, 1-based.
    pub fn apply(&self, letter: usize) -> usize {
        self.image[letter - 1] + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `self · other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Self { image: other.image.iter().map(|&k| self.image[k]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v] = k;
        }
        Self { image }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        // Scanning starts in increasing order, so every cycle begins at its
        // minimum letter and cycles come out sorted by minimum.
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !visited[k] {
                visited[k] = true;
                cycle.push(k + 1);
                k = self.image[k];
            }
            if cycle.len() == 1 {
                fixed_points.push(start + 1);
            } else {
                cycles.push(cycle);
            }
        }
        CycleDecomposition { n, cycles, fixed_points }
    }

    pub fn nontrivial_orbits(&self) -> OrbitPartition {
        let cycles = self.cycle_decomposition().cycles;
        OrbitPartition::from_orbits(self.n(), cycles.into_iter().map(|c| c.into_iter().collect()))
            .expect("cycle supports are disjoint orbits of size >= 2")
    }

    /// True iff σ has exactly one nontrivial cycle and it has length `k`.
    pub fn is_k_cycle(&self, k: usize) -> bool {
        let cycles = self.cycle_decomposition().cycles;
        cycles.len() == 1 && cycles[0].len() == k
    }

    /// The swapped pair, if σ is a transposition.
    pub fn as_transposition(&self) -> Option<BasisIndexPair> {
        let cycles = self.cycle_decomposition().cycles;
        match cycles.as_slice() {
            [c] if c.len() == 2 => BasisIndexPair::unordered(c[0], c[1]).ok(),
            _ => None,
        }
    }

    /// Transpositions whose ordered product (`iota`) reproduces σ exactly.
    ///
    /// A cycle `(a1 … ak)` equals `(a1,a2)(a2,a3)⋯(a{k-1},ak)`; since `iota`
    /// puts the last list element leftmost, the pairs are listed back to front.
    pub fn transposition_decomposition(&self) -> Vec<BasisIndexPair> {
        let mut out = Vec::new();
        for cycle in self.cycle_decomposition().cycles {
            for w in cycle.windows(2).rev() {
                out.push(BasisIndexPair::unordered(w[0], w[1]).expect("distinct letters"));
            }
        }
        out
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2)`; `()` is the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{text}`")))?;
            let close = body_start
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
            let body = &body_start[..close];
            let letters = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            if !letters.is_empty() {
                cycles.push(letters);
            }
            rest = body_start[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycle_decomposition().cycles;
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|l| l.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Disjoint-cycle form in canonical order: each cycle starts at its minimum
/// letter and cycles are sorted by that minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub n: usize,
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    pub fn recompose(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.cycles).expect("canonical cycles are disjoint")
    }
}

/// Ordered product of transpositions with the last pair leftmost:
/// `[p1, …, pl] ↦ p_l ⋯ p_2 p_1`. Depends on the list order.
pub fn iota(pairs: &[BasisIndexPair], n: usize) -> Result<Permutation> {
    let mut acc = Permutation::identity(n);
    for &p in pairs {
        acc = Permutation::transposition(n, p)?.compose(&acc)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSummary {
    pub order: usize,
    pub is_full_symmetric: bool,
    pub truncated: bool,
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Default enumeration bound for [`generate_subgroup`]: `10 · n!`.
pub fn default_cap(n: usize) -> usize {
    factorial(n).saturating_mul(10)
}

/// Breadth-first closure of `generators` under composition. Stops early with
/// `truncated = true` once more than `cap` elements have been found.
pub fn generate_subgroup(generators: &[Permutation], n: usize, cap: usize) -> Result<SubgroupSummary> {
    for g in generators {
        if g.n() != n {
            return Err(Error::SizeMismatch { left: g.n(), right: n });
        }
    }
    let identity = Permutation::identity(n);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.image.clone());
    queue.push_back(identity);
    let mut truncated = false;
    'bfs: while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x)?;
            if seen.insert(y.image.clone()) {
                if seen.len() > cap {
                    truncated = true;
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
    }
    let order = seen.len();
    Ok(SubgroupSummary {
        order,
        is_full_symmetric: !truncated && order == factorial(n),
        truncated,
    })
}
