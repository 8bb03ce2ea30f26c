//! System-level analysis: the orbit-partition verdict, the controllable
//! submanifold description, and the exact Lie-closure cross-check.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{self, ExactMatrix, LinearSpan};
use crate::monoid::{self, DisjointSets, OrbitPartition};
use crate::permgroup::{self, BasisIndexPair, Permutation, SubgroupSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "so_n")]
    SOn,
    #[serde(rename = "multi_agent")]
    MultiAgent,
    #[serde(rename = "markov")]
    Markov,
    #[serde(rename = "sphere")]
    SphereAction,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::SOn => "so_n",
            Family::MultiAgent => "multi_agent",
            Family::Markov => "markov",
            Family::SphereAction => "sphere",
        }
    }

    /// Families whose generators are `Ω_ij` (as opposed to `A_ij`).
    pub fn uses_omega(&self) -> bool {
        matches!(self, Family::SOn | Family::SphereAction)
    }

    pub fn generator(&self, n: usize, p: BasisIndexPair) -> Result<ExactMatrix> {
        if self.uses_omega() {
            liealg::omega(n, p)
        } else {
            liealg::agent_a(n, p)
        }
    }

    /// Dimension of the algebra a controllable system must generate.
    pub fn target_dim(&self, n: usize) -> usize {
        if self.uses_omega() {
            liealg::so_dim(n)
        } else {
            liealg::multi_agent_dim(n)
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bilinear system whose drift and control fields are standard basis
/// elements indexed by letter pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    pub family: Family,
    pub n: usize,
    /// Sorted, without duplicates.
    pub controls: Vec<BasisIndexPair>,
    pub drift: Option<BasisIndexPair>,
    pub agent_space_dim: Option<usize>,
    pub initial_distribution: Option<Vec<BigRational>>,
}

impl SystemSpec {
    pub fn new(family: Family, n: usize, controls: impl IntoIterator<Item = BasisIndexPair>) -> Self {
        let mut controls: Vec<_> = controls.into_iter().collect();
        controls.sort_unstable();
        controls.dedup();
        Self { family, n, controls, drift: None, agent_space_dim: None, initial_distribution: None }
    }

    pub fn with_drift(mut self, drift: BasisIndexPair) -> Self {
        self.drift = Some(drift);
        self
    }

    pub fn with_initial_distribution(mut self, p: Vec<BigRational>) -> Self {
        self.initial_distribution = Some(p);
        self
    }

    pub fn with_agent_space_dim(mut self, d: usize) -> Self {
        self.agent_space_dim = Some(d);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {}", self.n)));
        }
        for p in self.controls.iter().chain(&self.drift) {
            p.check_range(self.n)?;
        }
        if self.controls.is_empty() && self.drift.is_none() && self.family != Family::Markov {
            return Err(Error::InvalidSpec("no control or drift fields".into()));
        }
        if self.agent_space_dim.is_some() && self.family != Family::MultiAgent {
            return Err(Error::InvalidSpec("agent_space_dim applies to multi_agent only".into()));
        }
        if self.agent_space_dim == Some(0) {
            return Err(Error::InvalidSpec("agent_space_dim must be positive".into()));
        }
        if let Some(p) = &self.initial_distribution {
            if self.family != Family::Markov {
                return Err(Error::InvalidSpec("initial_distribution applies to markov only".into()));
            }
            if p.len() != self.n {
                return Err(Error::InvalidSpec(format!("initial_distribution has {} entries, need {}", p.len(), self.n)));
            }
            if p.iter().any(Signed::is_negative) {
                return Err(Error::InvalidSpec("initial_distribution has a negative entry".into()));
            }
            if !p.iter().sum::<BigRational>().is_one() {
                return Err(Error::InvalidSpec("initial_distribution does not sum to 1".into()));
            }
        }
        Ok(())
    }

    /// Controls together with the drift pair, sorted and deduplicated.
    pub fn fields(&self) -> Vec<BasisIndexPair> {
        let mut all: Vec<_> = self.controls.iter().chain(&self.drift).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn state_space_label(&self) -> String {
        let n = self.n;
        match self.family {
            Family::SOn => format!("SO({n})"),
            Family::SphereAction => format!("S^{}", n - 1),
            Family::Markov => format!("Δ^{}", n - 1),
            Family::MultiAgent => match self.agent_space_dim {
                Some(d) => format!("(Δ^{})^{n}", d.saturating_sub(1)),
                None => format!("(Δ^{{n-1}})^{n}"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmanifoldComponent {
    pub orbit: Vec<usize>,
    /// Labels of the vector fields spanning this block of the distribution.
    pub generators: Vec<String>,
    /// `None` when no closed form applies and the oracle has not run.
    pub dim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmanifoldDescription {
    pub components: Vec<SubmanifoldComponent>,
    pub total_dim: Option<usize>,
    pub state_space_label: String,
    /// `Σ_{i∈O} p_i`, preserved along every trajectory.
    pub markov_conserved_sums: Option<Vec<(Vec<usize>, BigRational)>>,
    /// States touched by no field keep `p_j = p_j(0)`.
    pub frozen_states: Option<Vec<(usize, BigRational)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovClassification {
    pub irreducible: bool,
    /// Nontrivial orbits plus singleton classes, ordered by minimum state.
    pub communication_classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub dim: usize,
    pub target_dim: usize,
    pub controllable: bool,
    /// Blocks recovered from which basis generators lie in the closure.
    pub orbits: OrbitPartition,
    pub agrees: bool,
    pub closure: LinearSpan,
}

#[derive(Debug, Clone)]
pub struct ControllabilityReport {
    pub family: Family,
    pub n: usize,
    pub controllable: bool,
    pub method_class: OrbitPartition,
    pub fixed_points: Vec<usize>,
    pub drift: Option<BasisIndexPair>,
    pub field_count: usize,
    pub min_controls_satisfied: bool,
    pub submanifold: SubmanifoldDescription,
    pub markov: Option<MarkovClassification>,
    pub oracle: Option<OracleOutcome>,
}

impl ControllabilityReport {
    pub fn orbits(&self) -> &[Vec<usize>] {
        self.method_class.orbits()
    }

    pub fn oracle_dim(&self) -> Option<usize> {
        self.oracle.as_ref().map(|o| o.dim)
    }

    pub fn oracle_agrees(&self) -> Option<bool> {
        self.oracle.as_ref().map(|o| o.agrees)
    }
}

/// Size limits for the Lie-closure oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_so_n: usize,
    pub max_agents: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { max_so_n: 12, max_agents: 8 }
    }
}

impl OracleLimits {
    pub const ENV_VAR: &'static str = "CTRLPERM_ORACLE_MAX_N";

    /// Defaults, with both limits replaced by `CTRLPERM_ORACLE_MAX_N` when set.
    pub fn from_env() -> Self {
        match std::env::var(Self::ENV_VAR).ok().and_then(|v| v.trim().parse().ok()) {
            Some(max) => Self { max_so_n: max, max_agents: max },
            None => Self::default(),
        }
    }

    fn limit_for(&self, family: Family) -> usize {
        if family.uses_omega() {
            self.max_so_n
        } else {
            self.max_agents
        }
    }
}

fn pairs_within(orbit: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    orbit.iter().enumerate().flat_map(move |(a, &i)| orbit[a + 1..].iter().map(move |&j| (i, j)))
}

fn component_for(family: Family, orbit: &[usize]) -> SubmanifoldComponent {
    let state = match family {
        Family::SphereAction => "x",
        Family::Markov => "P",
        _ => "X",
    };
    let fmt_pair = |i: usize, j: usize| format!("{i},{j}");
    let (generators, dim) = if family.uses_omega() {
        let labels = pairs_within(orbit).map(|(i, j)| format!("Omega_{{{}}} {state}", fmt_pair(i, j))).collect();
        (labels, Some(liealg::so_dim(orbit.len())))
    } else {
        let mut labels: Vec<String> = pairs_within(orbit).map(|(i, j)| format!("A_{{{}}} {state}", fmt_pair(i, j))).collect();
        for (a, &i) in orbit.iter().enumerate() {
            for (i2, j) in pairs_within(&orbit[a + 1..]) {
                labels.push(format!("B_{{{i},{i2},{j}}} {state}"));
            }
        }
        (labels, None)
    };
    SubmanifoldComponent { orbit: orbit.to_vec(), generators, dim }
}

/// `|controls ∪ drift| >= n − 1`, a necessary condition for controllability.
pub fn min_controls_check(spec: &SystemSpec) -> bool {
    spec.fields().len() + 1 >= spec.n
}

/// Decides controllability from the orbit partition `ι̃(controls ∪ drift)`.
/// Uses no matrix arithmetic.
pub fn analyze(spec: &SystemSpec) -> Result<ControllabilityReport> {
    spec.validate()?;
    let fields = spec.fields();
    let method_class = monoid::iota_tilde(&fields, spec.n)?;
    let controllable = monoid::is_full_cycle_class(&method_class);
    let fixed_points = method_class.fixed_points();

    let components: Vec<_> = method_class.orbits().iter().map(|o| component_for(spec.family, o)).collect();
    let total_dim = components.iter().map(|c| c.dim).sum::<Option<usize>>();
    let (markov_conserved_sums, frozen_states) = match &spec.initial_distribution {
        Some(p) => {
            let sums = method_class
                .orbits()
                .iter()
                .map(|o| (o.clone(), o.iter().map(|&l| p[l - 1].clone()).sum()))
                .collect();
            let frozen = fixed_points.iter().map(|&l| (l, p[l - 1].clone())).collect();
            (Some(sums), Some(frozen))
        }
        None => (None, None),
    };
    let submanifold = SubmanifoldDescription {
        components,
        total_dim,
        state_space_label: spec.state_space_label(),
        markov_conserved_sums,
        frozen_states,
    };
    let markov = (spec.family == Family::Markov).then(|| MarkovClassification {
        irreducible: controllable,
        communication_classes: method_class.blocks(),
    });

    Ok(ControllabilityReport {
        family: spec.family,
        n: spec.n,
        controllable,
        fixed_points,
        drift: spec.drift,
        field_count: fields.len(),
        min_controls_satisfied: min_controls_check(spec),
        submanifold,
        markov,
        oracle: None,
        method_class,
    })
}

/// Exact LARC verdict: closes the generator matrices under brackets and
/// compares the dimension with the full algebra.
pub fn oracle_check(spec: &SystemSpec, limits: OracleLimits) -> Result<OracleOutcome> {
    spec.validate()?;
    let limit = limits.limit_for(spec.family);
    if spec.n > limit {
        return Err(Error::SizeGuard { n: spec.n, limit });
    }
    let n = spec.n;
    let gens = spec.fields().into_iter().map(|p| spec.family.generator(n, p)).collect::<Result<Vec<_>>>()?;
    let closure = if gens.is_empty() { LinearSpan::new(n) } else { liealg::lie_closure(&gens)? };
    let dim = closure.dim();
    let target_dim = spec.family.target_dim(n);

    let mut sets = DisjointSets::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let g = spec.family.generator(n, BasisIndexPair::new(i, j)?)?;
            if closure.contains(&g)? {
                sets.union(i, j);
            }
        }
    }
    let orbits = OrbitPartition::from_blocks(n, sets.blocks())?;
    let controllable = dim == target_dim;

    let method = monoid::iota_tilde(&spec.fields(), n)?;
    let agrees = controllable == monoid::is_full_cycle_class(&method) && orbits == method;
    Ok(OracleOutcome { dim, target_dim, controllable, orbits, agrees, closure })
}

/// [`analyze`] followed by [`oracle_check`]. For the `A_ij` families the
/// per-orbit dimensions are filled from closures of each orbit's fields.
pub fn analyze_with_oracle(spec: &SystemSpec, limits: OracleLimits) -> Result<ControllabilityReport> {
    let mut report = analyze(spec)?;
    let outcome = oracle_check(spec, limits)?;
    if !spec.family.uses_omega() {
        let fields = spec.fields();
        for comp in &mut report.submanifold.components {
            let gens = fields
                .iter()
                .filter(|p| comp.orbit.binary_search(&p.i()).is_ok())
                .map(|&p| spec.family.generator(spec.n, p))
                .collect::<Result<Vec<_>>>()?;
            comp.dim = Some(liealg::lie_closure(&gens)?.dim());
        }
        report.submanifold.total_dim = report.submanifold.components.iter().map(|c| c.dim).sum();
    }
    report.oracle = Some(outcome);
    Ok(report)
}

/// Communication classes of the symmetric chain with the given sparsity pattern.
pub fn markov_classify(spec: &SystemSpec) -> Result<MarkovClassification> {
    if spec.family != Family::Markov {
        return Err(Error::InvalidSpec(format!("markov_classify needs family markov, got {}", spec.family)));
    }
    Ok(analyze(spec)?.markov.expect("markov family"))
}

/// Output of the subgroup experiment for generators that are signed sums of
/// disjoint standard basis elements. Diagnostic only; not a verdict.
#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub n: usize,
    pub permutations: Vec<Permutation>,
    pub subgroup: SubgroupSummary,
    pub larc_dim: usize,
    pub so_dim: usize,
    pub larc_controllable: bool,
    pub experimental: bool,
}

/// Largest subgroup enumeration the probe attempts (`10 · 8!`).
pub const PROBE_CAP: usize = 403_200;

/// Maps each generator `Σ ±Ω_{ab}` (pairwise-disjoint pairs) to the product of
/// its transpositions, closes them to a subgroup, and runs the LARC alongside.
pub fn nonstandard_probe(generators: &[ExactMatrix], n: usize) -> Result<ProbeReport> {
    if generators.is_empty() {
        return Err(Error::InvalidSpec("probe needs at least one generator".into()));
    }
    let mut permutations = Vec::with_capacity(generators.len());
    for (index, g) in generators.iter().enumerate() {
        if g.n() != n {
            return Err(Error::SizeMismatch { left: g.n(), right: n });
        }
        let fail = |reason: &str| Error::NotDecomposable { index, reason: reason.to_string() };
        let terms = liealg::signed_omega_terms(g).ok_or_else(|| fail("not a ±1 combination of Ω pairs"))?;
        if terms.is_empty() {
            return Err(fail("zero matrix"));
        }
        let mut used = vec![false; n + 1];
        for t in &terms {
            for l in [t.pair.i(), t.pair.j()] {
                if std::mem::replace(&mut used[l], true) {
                    return Err(fail("pairs share an index"));
                }
            }
        }
        let pairs: Vec<_> = terms.iter().map(|t| t.pair).collect();
        permutations.push(permgroup::iota(&pairs, n)?);
    }
    let cap = permgroup::default_cap(n).min(PROBE_CAP);
    let subgroup = permgroup::generate_subgroup(&permutations, n, cap)?;
    let closure = liealg::lie_closure(generators)?;
    let so_dim = liealg::so_dim(n);
    Ok(ProbeReport {
        n,
        permutations,
        subgroup,
        larc_dim: closure.dim(),
        so_dim,
        larc_controllable: closure.dim() == so_dim,
        experimental: true,
    })
}

/// Uniform distribution on `n` states.
pub fn uniform_distribution(n: usize) -> Vec<BigRational> {
    vec![BigRational::new(1.into(), (n as i64).into()); n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::omega;
    use crate::rational::parse_rational;

    fn pairs(list: &[(usize, usize)]) -> Vec<BasisIndexPair> {
        list.iter().map(|&(i, j)| BasisIndexPair::new(i, j).unwrap()).collect()
    }

    fn son(n: usize, list: &[(usize, usize)]) -> SystemSpec {
        SystemSpec::new(Family::SOn, n, pairs(list))
    }

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn analyze_so5_examples() {
        let r = analyze(&son(5, &[(1, 2), (2, 3), (3, 4), (4, 5)])).unwrap();
        assert!(r.controllable);
        assert_eq!(r.submanifold.total_dim, Some(10));

        let r = analyze(&son(5, &[(1, 2), (2, 3), (4, 5)])).unwrap();
        assert!(!r.controllable);
        assert_eq!(r.orbits(), &[vec![1, 2, 3], vec![4, 5]]);
        let dims: Vec<_> = r.submanifold.components.iter().map(|c| c.dim.unwrap()).collect();
        assert_eq!(dims, vec![3, 1]);
        assert_eq!(r.submanifold.components[1].generators, vec!["Omega_{4,5} X"]);
        assert!(!r.min_controls_satisfied);
        assert!(r.oracle.is_none());
    }

    #[test]
    fn markov_conserved_sums() {
        let spec = SystemSpec::new(Family::Markov, 5, pairs(&[(1, 2), (2, 3), (4, 5)]))
            .with_initial_distribution(uniform_distribution(5));
        let r = analyze(&spec).unwrap();
        let sums = r.submanifold.markov_conserved_sums.unwrap();
        assert_eq!(sums, vec![(vec![1, 2, 3], q("3/5")), (vec![4, 5], q("2/5"))]);
        assert_eq!(r.submanifold.frozen_states, Some(vec![]));
        assert_eq!(r.submanifold.state_space_label, "Δ^4");
    }

    #[test]
    fn oracle_examples() {
        let o = oracle_check(&son(5, &[(1, 2), (2, 3), (4, 5)]), OracleLimits::default()).unwrap();
        assert_eq!(o.dim, 4);
        assert!(!o.controllable && o.agrees);
        assert_eq!(o.orbits.to_string(), "{1,2,3}{4,5}");

        let o = oracle_check(&son(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]), OracleLimits::default()).unwrap();
        assert_eq!(o.dim, 6);
        assert!(o.controllable && o.agrees);

        let ma = SystemSpec::new(Family::MultiAgent, 3, pairs(&[(1, 2), (2, 3)]));
        let o = oracle_check(&ma, OracleLimits::default()).unwrap();
        assert_eq!((o.dim, o.target_dim), (4, 4));
        assert!(o.controllable && o.agrees);
    }

    #[test]
    fn oracle_size_guard() {
        let spec = son(13, &[(1, 2)]);
        assert_eq!(oracle_check(&spec, OracleLimits::default()).unwrap_err(), Error::SizeGuard { n: 13, limit: 12 });
        let relaxed = OracleLimits { max_so_n: 13, max_agents: 8 };
        assert!(oracle_check(&spec, relaxed).is_ok());
        let ma = SystemSpec::new(Family::MultiAgent, 9, pairs(&[(1, 2)]));
        assert!(matches!(oracle_check(&ma, OracleLimits::default()), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn multi_agent_component_dims_come_from_oracle() {
        let spec = SystemSpec::new(Family::MultiAgent, 5, pairs(&[(1, 2), (2, 3), (4, 5)])).with_agent_space_dim(2);
        let plain = analyze(&spec).unwrap();
        assert_eq!(plain.submanifold.total_dim, None);
        assert_eq!(plain.submanifold.state_space_label, "(Δ^1)^5");
        assert!(plain.submanifold.components[0].generators.contains(&"B_{1,2,3} X".to_string()));
        let full = analyze_with_oracle(&spec, OracleLimits::default()).unwrap();
        let dims: Vec<_> = full.submanifold.components.iter().map(|c| c.dim).collect();
        assert_eq!(dims, vec![Some(4), Some(1)]);
        assert_eq!(full.submanifold.total_dim, full.oracle_dim());
        assert_eq!(full.oracle_agrees(), Some(true));
    }

    #[test]
    fn min_controls() {
        assert!(min_controls_check(&son(5, &[(1, 2), (2, 3), (3, 4), (4, 5)])));
        assert!(!min_controls_check(&son(5, &[(1, 2), (2, 3), (4, 5)])));
        assert!(min_controls_check(&son(2, &[(1, 2)])));
        let with_drift = son(3, &[(1, 2)]).with_drift(BasisIndexPair::new(2, 3).unwrap());
        assert!(min_controls_check(&with_drift));
        assert!(analyze(&with_drift).unwrap().controllable);
    }

    #[test]
    fn markov_classification() {
        let m = |list: &[(usize, usize)]| SystemSpec::new(Family::Markov, 5, pairs(list));
        assert!(markov_classify(&m(&[(1, 2), (2, 3), (3, 4), (4, 5)])).unwrap().irreducible);
        let c = markov_classify(&m(&[(1, 2), (4, 5)])).unwrap();
        assert!(!c.irreducible);
        assert_eq!(c.communication_classes, vec![vec![1, 2], vec![3], vec![4, 5]]);
        let e = markov_classify(&m(&[])).unwrap();
        assert_eq!(e.communication_classes.len(), 5);
        assert!(!e.irreducible);
        assert!(markov_classify(&son(3, &[(1, 2)])).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(son(1, &[]).validate().is_err());
        assert!(son(3, &[]).validate().is_err());
        assert!(son(3, &[(1, 4)]).validate().is_err());
        let bad_p = SystemSpec::new(Family::Markov, 2, pairs(&[(1, 2)])).with_initial_distribution(vec![q("1/2"), q("1/3")]);
        assert!(bad_p.validate().is_err());
        let neg = SystemSpec::new(Family::Markov, 2, pairs(&[(1, 2)])).with_initial_distribution(vec![q("3/2"), q("-1/2")]);
        assert!(neg.validate().is_err());
        let wrong = son(3, &[(1, 2)]).with_initial_distribution(uniform_distribution(3));
        assert!(wrong.validate().is_err());
        assert!(son(3, &[(1, 2)]).with_agent_space_dim(2).validate().is_err());
    }

    #[test]
    fn sphere_family() {
        let spec = SystemSpec::new(Family::SphereAction, 4, pairs(&[(1, 2), (2, 3), (3, 4)]));
        let r = analyze_with_oracle(&spec, OracleLimits::default()).unwrap();
        assert!(r.controllable);
        assert_eq!(r.submanifold.state_space_label, "S^3");
        assert_eq!(r.oracle_dim(), Some(6));
        let x = vec![q("1"), q("2"), q("0"), q("-1")];
        let closure = &r.oracle.as_ref().unwrap().closure;
        assert_eq!(liealg::evaluated_rank(closure, &x).unwrap(), 3);
    }

    #[test]
    fn probe_examples() {
        let o = |i, j| omega(4, BasisIndexPair::new(i, j).unwrap()).unwrap();
        let g = vec![&o(1, 2) + &o(3, 4), o(2, 3)];
        let r = nonstandard_probe(&g, 4).unwrap();
        assert_eq!(r.subgroup.order, 8);
        assert!(!r.subgroup.is_full_symmetric);
        assert_eq!(r.larc_dim, 4);
        assert!(!r.larc_controllable && r.experimental);
        assert_eq!(r.permutations[0].to_string(), "(1 2)(3 4)");

        let mut g2 = g.clone();
        g2.push(o(1, 2));
        let r = nonstandard_probe(&g2, 4).unwrap();
        assert_eq!((r.subgroup.order, r.larc_dim), (24, 6));
        assert!(r.subgroup.is_full_symmetric && r.larc_controllable);

        let single = nonstandard_probe(&[omega(2, BasisIndexPair::new(1, 2).unwrap()).unwrap()], 2).unwrap();
        assert_eq!((single.subgroup.order, single.larc_dim), (2, 1));
        assert!(single.larc_controllable);
    }

    #[test]
    fn probe_rejects_overlapping_supports() {
        let o = |i, j| omega(4, BasisIndexPair::new(i, j).unwrap()).unwrap();
        let err = nonstandard_probe(&[&o(1, 2) + &o(1, 3)], 4).unwrap_err();
        assert!(matches!(err, Error::NotDecomposable { index: 0, .. }));
        assert!(nonstandard_probe(&[ExactMatrix::zeros(4)], 4).is_err());
        assert!(nonstandard_probe(&[ExactMatrix::identity(4)], 4).is_err());
        assert!(nonstandard_probe(&[], 4).is_err());
    }
}
