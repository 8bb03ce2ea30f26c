//! Exact matrix Lie algebra engine.
//!
//! Matrices carry `BigRational` entries. Spans are kept in fraction-free row
//! echelon form over the vectorized `n²`-length rows, so rank and membership
//! decisions are exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::permgroup::BasisIndexPair;
use crate::rational::{format_rational, int, parse_rational};

/// Square matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![BigRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m.set(k, k, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::SizeMismatch { left: row.len(), right: n });
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    /// `E_ab` with 1-based indices.
    pub fn unit(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zeros(n);
        m.set(a - 1, b - 1, BigRational::one());
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        self.entries[row * self.n + col] = value;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        (self + &self.transpose()).is_zero()
    }

    pub fn has_zero_line_sums(&self) -> bool {
        let n = self.n;
        (0..n).all(|r| (0..n).map(|c| self.get(r, c)).sum::<BigRational>().is_zero())
            && (0..n).all(|c| (0..n).map(|r| self.get(r, c)).sum::<BigRational>().is_zero())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|e| e * k).collect() }
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: v.len() });
        }
        Ok((0..self.n)
            .map(|r| {
                (0..self.n)
                    .filter(|&c| !self.get(r, c).is_zero() && !v[c].is_zero())
                    .map(|c| self.get(r, c) * &v[c])
                    .sum()
            })
            .collect())
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        // Generators are sparse; skip zero factors.
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch { left: self.n, right: rhs.n });
        }
        Ok(())
    }

    /// Dense grid of rational tokens, one row per line.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| l.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        Self::from_rows(rows)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| format_rational(self.get(r, c))).collect();
            if r > 0 {
                f.write_str("\n")?;
            }
            f.write_str(&row.join(" "))?;
        }
        Ok(())
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix size mismatch")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }
}

/// `Ω_ij = E_ij − E_ji`.
pub fn omega(n: usize, p: BasisIndexPair) -> Result<ExactMatrix> {
    p.check_range(n)?;
    Ok(&ExactMatrix::unit(n, p.i(), p.j()) - &ExactMatrix::unit(n, p.j(), p.i()))
}

/// `[A, B] = AB − BA`.
pub fn bracket(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    Ok(&a.try_mul(b)? - &b.try_mul(a)?)
}

/// `±Ω_pair`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedBasisTerm {
    pub coefficient: i64,
    pub pair: BasisIndexPair,
}

/// Symbolic `[Ω_ij, Ω_kl]` from
/// `δ_jk Ω_il + δ_il Ω_jk + δ_jl Ω_ki + δ_ik Ω_lj`, with `Ω_ba = −Ω_ab` and
/// `Ω_aa = 0`. An empty result is the zero element.
pub fn bracket_structure(p: BasisIndexPair, q: BasisIndexPair, n: usize) -> Result<Vec<SignedBasisTerm>> {
    p.check_range(n)?;
    q.check_range(n)?;
    let (i, j, k, l) = (p.i(), p.j(), q.i(), q.j());
    let raw = [(j == k, i, l), (i == l, j, k), (j == l, k, i), (i == k, l, j)];
    let mut acc: BTreeMap<BasisIndexPair, i64> = BTreeMap::new();
    for (hit, a, b) in raw {
        if !hit || a == b {
            continue;
        }
        let sign = if a < b { 1 } else { -1 };
        *acc.entry(BasisIndexPair::unordered(a, b)?).or_default() += sign;
    }
    Ok(acc
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(pair, coefficient)| SignedBasisTerm { coefficient, pair })
        .collect())
}

/// Matrix value of a symbolic linear combination of standard basis elements.
pub fn terms_to_matrix(terms: &[SignedBasisTerm], n: usize) -> Result<ExactMatrix> {
    terms.iter().try_fold(ExactMatrix::zeros(n), |acc, t| {
        Ok(&acc + &omega(n, t.pair)?.scale(&int(t.coefficient)))
    })
}

/// `A_ij = e_i e_j' + e_j e_i' − e_i e_i' − e_j e_j'`.
pub fn agent_a(n: usize, p: BasisIndexPair) -> Result<ExactMatrix> {
    p.check_range(n)?;
    let (i, j) = (p.i(), p.j());
    let off = &ExactMatrix::unit(n, i, j) + &ExactMatrix::unit(n, j, i);
    let diag = &ExactMatrix::unit(n, i, i) + &ExactMatrix::unit(n, j, j);
    Ok(&off - &diag)
}

/// `B_ijk = (e_i e_k' − e_k e_i') − (e_i e_j' − e_j e_i') − (e_j e_k' − e_k e_j')`.
pub fn agent_b(n: usize, i: usize, j: usize, k: usize) -> Result<ExactMatrix> {
    for letter in [i, j, k] {
        if letter == 0 || letter > n {
            return Err(Error::LetterOutOfRange { letter, n });
        }
    }
    if i == j || j == k || i == k {
        return Err(Error::RepeatedIndex(i, j, k));
    }
    let w = |a, b| &ExactMatrix::unit(n, a, b) - &ExactMatrix::unit(n, b, a);
    Ok(&(&w(i, k) - &w(i, j)) - &w(j, k))
}

/// Row echelon form over the integers. Rows are kept primitive (content 1)
/// and sorted by pivot column.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    width: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowEchelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn integer_row(values: &[BigRational]) -> Vec<BigInt> {
        let lcm = values.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut row: Vec<BigInt> = values.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        make_primitive(&mut row);
        row
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let scale_v = row[*pivot].clone();
            let scale_row = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * &scale_v - &scale_row * r;
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Adds `values` to the row space; returns true iff the rank grew.
    pub fn insert(&mut self, values: &[BigRational]) -> bool {
        assert_eq!(values.len(), self.width, "row width mismatch");
        let v = self.reduce(Self::integer_row(values));
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                let at = self.rows.partition_point(|(p, _)| *p < pivot);
                self.rows.insert(at, (pivot, v));
                true
            }
        }
    }

    pub fn contains(&self, values: &[BigRational]) -> bool {
        assert_eq!(values.len(), self.width, "row width mismatch");
        self.reduce(Self::integer_row(values)).iter().all(Zero::is_zero)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Linear subspace of `n × n` matrices.
#[derive(Debug, Clone)]
pub struct LinearSpan {
    n: usize,
    echelon: RowEchelon,
    members: Vec<ExactMatrix>,
}

impl LinearSpan {
    pub fn new(n: usize) -> Self {
        Self { n, echelon: RowEchelon::new(n * n), members: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `m` if it is independent of the current span.
    pub fn insert(&mut self, m: ExactMatrix) -> Result<bool> {
        self.check(&m)?;
        let grew = self.echelon.insert(m.entries());
        if grew {
            self.members.push(m);
        }
        Ok(grew)
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, m: &ExactMatrix) -> Result<bool> {
        self.check(m)?;
        Ok(self.echelon.contains(m.entries()))
    }

    /// The independent elements in insertion order (generators, then brackets).
    pub fn members(&self) -> &[ExactMatrix] {
        &self.members
    }

    /// Echelon basis rows reshaped to matrices.
    pub fn basis(&self) -> Vec<ExactMatrix> {
        self.echelon
            .rows()
            .map(|row| ExactMatrix {
                n: self.n,
                entries: row.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
            })
            .collect()
    }

    fn check(&self, m: &ExactMatrix) -> Result<()> {
        if m.n != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: m.n });
        }
        Ok(())
    }

    /// Renders the echelon basis as matrix blocks separated by blank lines.
    pub fn render(&self) -> String {
        self.basis().iter().map(ToString::to_string).collect::<Vec<_>>().join("\n\n")
    }
}

/// Smallest bracket-closed subspace containing `generators`.
///
/// Each newly independent element is bracketed against every element present
/// when it is dequeued; later elements pair with it on their own turn.
pub fn lie_closure(generators: &[ExactMatrix]) -> Result<LinearSpan> {
    let first = generators.first().ok_or_else(|| Error::InvalidSpec("no generators".into()))?;
    let n = first.n();
    let mut span = LinearSpan::new(n);
    for g in generators {
        span.insert(g.clone())?;
    }
    let mut next = 0;
    while next < span.members.len() {
        let x = span.members[next].clone();
        next += 1;
        let present = span.members.len();
        for idx in 0..present {
            let b = bracket(&x, &span.members[idx])?;
            if !b.is_zero() {
                span.insert(b)?;
            }
        }
    }
    if generators.iter().all(ExactMatrix::is_antisymmetric) {
        debug_assert!(span.dim() <= n * (n - 1) / 2, "closure of skew generators exceeds dim so(n)");
    }
    Ok(span)
}

/// Checks that the bracket of every pair of basis elements stays in the span.
pub fn is_bracket_closed(span: &LinearSpan) -> bool {
    let basis = span.basis();
    basis.iter().enumerate().all(|(a, x)| {
        basis[a + 1..].iter().all(|y| bracket(x, y).and_then(|b| span.contains(&b)).unwrap_or(false))
    })
}

/// Rank of `{M·point : M in span}`.
pub fn evaluated_rank(span: &LinearSpan, point: &[BigRational]) -> Result<usize> {
    if point.len() != span.n {
        return Err(Error::SizeMismatch { left: span.n, right: point.len() });
    }
    let mut ech = RowEchelon::new(span.n);
    for m in span.members() {
        ech.insert(&m.mul_vec(point)?);
    }
    Ok(ech.rank())
}

/// Dimension of the full multi-agent algebra of zero line-sum matrices.
pub fn multi_agent_dim(n: usize) -> usize {
    (n - 1) * (n - 1)
}

/// Dimension of `so(n)`.
pub fn so_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Decomposes a matrix into `Σ ±Ω_pair`. Returns `None` unless the matrix is
/// antisymmetric with every upper-triangle entry in `{−1, 0, 1}`.
pub fn signed_omega_terms(m: &ExactMatrix) -> Option<Vec<SignedBasisTerm>> {
    if !m.is_antisymmetric() {
        return None;
    }
    let n = m.n();
    let mut terms = Vec::new();
    for r in 0..n {
        for c in r + 1..n {
            let v = m.get(r, c);
            if v.is_zero() {
                continue;
            }
            if !v.is_integer() || v.abs() != BigRational::one() {
                return None;
            }
            let coefficient = if v.is_positive() { 1 } else { -1 };
            terms.push(SignedBasisTerm { coefficient, pair: BasisIndexPair::new(r + 1, c + 1).ok()? });
        }
    }
    Some(terms)
}
