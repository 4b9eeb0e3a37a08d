//! Property sweeps behind the `verify` subcommand.
//!
//! Each [`Check`] runs one family of invariants over the configured range and
//! reports how many individual assertions it made together with any
//! failures. Checks are independent and run concurrently; results come back
//! in declaration order.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::complexify::{
    complexify_algebra, complexify_orbit, fibre, image, is_quasi_split, is_split, is_surjective, regular_in_image,
    sigma_fixed, SigmaStatus,
};
use crate::diagrams::{enumerate_all_fillings, enumerate_signed_fillings, signature_of, Signature};
use crate::error::{Error, Result};
use crate::oracle::{
    antidiagonal_form, centralizer_dimension, expected_rank_sequence, jordan_from_blocks, orthogonal_representative,
    preserves_form, rank_sequence, DimensionOracle, MatrixFamily,
};
use crate::orbit_index::{
    enumerate_orbits, enumerate_simple_orbits, orbits_with_partition, underlying_partition, validate_orbit,
    AlgebraSpec, OrbitIndex, SimpleAlgebra,
};
use crate::par;
use crate::partitions::{dominates, enumerate_partitions, transpose, Partition};
use crate::poset::closure_order_sl;

/// Real families covered by a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    SlReal,
    Su,
    SoReal,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::SlReal, Family::Su, Family::SoReal];
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sl_R" | "sl" | "slR" => Ok(Family::SlReal),
            "su" => Ok(Family::Su),
            "so_R" | "so" | "soR" => Ok(Family::SoReal),
            other => Err(Error::Parse { token: other.to_string(), reason: "expected sl_R, su or so_R".into() }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::SlReal => "sl_R",
            Family::Su => "su",
            Family::SoReal => "so_R",
        })
    }
}

/// Largest rank parameter used for two-term sums.
pub const SUM_PARAMETER_BOUND: usize = 4;
/// Largest rank parameter used by the dimension oracle sweeps.
pub const ORACLE_PARAMETER_BOUND: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub families: BTreeSet<Family>,
    pub include_sums: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 8, families: Family::ALL.into_iter().collect(), include_sums: false }
    }
}

impl SweepConfig {
    pub fn new(max_n: usize, families: BTreeSet<Family>, include_sums: bool) -> Result<Self> {
        if max_n < 2 {
            return Err(Error::Parse { token: max_n.to_string(), reason: "max-n must be at least 2".into() });
        }
        if families.is_empty() {
            return Err(Error::Parse { token: String::new(), reason: "family set must be nonempty".into() });
        }
        Ok(SweepConfig { max_n, families, include_sums })
    }

    /// Every simple real member whose parameters are all at most `bound`.
    pub fn simple_algebras_up_to(&self, bound: usize) -> Vec<SimpleAlgebra> {
        let mut out = Vec::new();
        for family in &self.families {
            match family {
                Family::SlReal => out.extend((2..=bound).map(SimpleAlgebra::SlReal)),
                Family::Su => {
                    for p in 1..=bound {
                        out.extend((1..=p).map(|q| SimpleAlgebra::Su(p, q)));
                    }
                }
                Family::SoReal => {
                    for p in 1..=bound {
                        out.extend((1..=p).filter(|q| p + q >= 3).map(|q| SimpleAlgebra::SoReal(p, q)));
                    }
                }
            }
        }
        out
    }

    pub fn simple_algebras(&self) -> Vec<SimpleAlgebra> {
        self.simple_algebras_up_to(self.max_n)
    }

    /// Unordered two-term sums with parameters at most [`SUM_PARAMETER_BOUND`].
    pub fn sum_algebras(&self) -> Vec<AlgebraSpec> {
        if !self.include_sums {
            return Vec::new();
        }
        let members = self.simple_algebras_up_to(self.max_n.min(SUM_PARAMETER_BOUND));
        let mut out = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                out.push(AlgebraSpec::new(vec![a, b]).expect("members are in range"));
            }
        }
        out
    }

    /// Simple algebras followed by sums.
    pub fn algebras(&self) -> Vec<AlgebraSpec> {
        let mut all: Vec<AlgebraSpec> = self.simple_algebras().into_iter().map(AlgebraSpec::simple).collect();
        all.extend(self.sum_algebras());
        all
    }
}

/// Result of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub assertions: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    assertions: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { assertions: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.assertions += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn result<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.assertions += 1;
                self.failures.push(format!("{}: {e}", context()));
                None
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.assertions += other.assertions;
        self.failures.extend(other.failures);
    }
}

type CheckFn = fn(&SweepConfig, &DimensionOracle) -> Tally;

pub struct Check {
    pub name: &'static str,
    run: CheckFn,
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { name: "partitions: dominance is a partial order (n <= 12)", run: dominance_axioms },
        Check { name: "partitions: transpose reverses dominance (n <= 10)", run: dominance_anti_isomorphism },
        Check { name: "partitions: (n) and (1^n) are extremal", run: dominance_extremes },
        Check { name: "partitions: counts match the pentagonal recurrence (n <= 20)", run: partition_counts },
        Check { name: "diagrams: fillings have the requested shape and signature (n <= 10)", run: filling_round_trip },
        Check { name: "diagrams: fillings over all signatures partition all fillings", run: filling_partition },
        Check { name: "orbits: enumerated indices are valid and distinct", run: orbits_valid },
        Check { name: "orbits: su(p,q) counts match raw sign-vector enumeration", run: su_brute_force },
        Check { name: "orbits: so(m,C) has one orbit per mixed partition, two per all-even", run: so_complex_counts },
        Check { name: "orbits: counts multiply over direct sums", run: product_counts },
        Check { name: "complexify: underlying partition is preserved", run: partition_preservation },
        Check { name: "complexify: fibres partition I(g)", run: fibres_partition },
        Check { name: "complexify: split implies surjective", run: split_surjective },
        Check { name: "complexify: surjectivity matches the quasi-split criterion", run: criterion_agreement },
        Check { name: "complexify: regular orbit in image iff quasi-split", run: regular_quasi_split },
        Check { name: "complexify: images multiply over direct sums", run: product_images },
        Check { name: "complexify: conjugation status is consistent with the image", run: sigma_consistency },
        Check { name: "poset: closure order on sl(n,C) (n <= 10)", run: poset_axioms },
        Check { name: "poset: Hasse diagram closes back to the order (n <= 10)", run: hasse_round_trip },
        Check { name: "poset: sl(n,R) fibres sit over single elements", run: fibre_linkage },
        Check { name: "oracle: sl orbit dimension matches n^2 - sum of squared columns (n <= 7)", run: sl_closed_form },
        Check { name: "oracle: block order does not change the centralizer (n <= 5)", run: block_order_independence },
        Check { name: "oracle: orthogonal representatives (m <= 10)", run: orthogonal_postconditions },
        Check { name: "oracle: complex orbit dimensions are even", run: even_dimensions },
        Check { name: "oracle: dimension increases strictly up the dominance order (n <= 7)", run: dimension_monotone },
        Check { name: "oracle: fibres are equidimensional", run: fibres_equidimensional },
    ]
}

/// Runs every check; the outcome list follows [`checks`] order.
pub fn run_checks(config: &SweepConfig) -> Vec<CheckOutcome> {
    let oracle = DimensionOracle::new();
    par::map(&checks(), |c| {
        let tally = (c.run)(config, &oracle);
        CheckOutcome { name: c.name, assertions: tally.assertions, failures: tally.failures }
    })
}

fn dominance_axioms(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 0..=12 {
        let all = enumerate_partitions(n);
        let d = |a: &Partition, b: &Partition| dominates(a, b).unwrap();
        for a in &all {
            t.check(d(a, a), || format!("{a} not reflexive"));
            for b in &all {
                if a != b && d(a, b) && d(b, a) {
                    t.check(false, || format!("{a}, {b} violate antisymmetry"));
                }
                if !d(a, b) {
                    continue;
                }
                for c in &all {
                    if d(b, c) {
                        t.check(d(a, c), || format!("{a} >= {b} >= {c} not transitive"));
                    }
                }
            }
        }
    }
    t
}

fn dominance_anti_isomorphism(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 0..=10 {
        let all = enumerate_partitions(n);
        for a in &all {
            for b in &all {
                let forward = dominates(a, b).unwrap();
                let back = dominates(&transpose(b), &transpose(a)).unwrap();
                t.check(forward == back, || format!("{a} vs {b}"));
            }
        }
    }
    t
}

fn dominance_extremes(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 1..=config.max_n.max(12) {
        let (top, bottom) = (Partition::single_row(n), Partition::single_column(n));
        for lam in enumerate_partitions(n) {
            t.check(dominates(&top, &lam).unwrap(), || format!("(n) vs {lam}"));
            t.check(dominates(&lam, &bottom).unwrap(), || format!("{lam} vs (1^n)"));
        }
    }
    t
}

/// Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

fn partition_counts(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 0..=20 {
        let got = enumerate_partitions(n);
        let distinct: HashSet<&Partition> = got.iter().collect();
        t.check(got.len() as u64 == partition_count(n), || format!("p({n}) = {} enumerated", got.len()));
        t.check(distinct.len() == got.len(), || format!("duplicates among partitions of {n}"));
    }
    t
}

fn filling_round_trip(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 0..=10 {
        for lam in enumerate_partitions(n) {
            for plus in 0..=n {
                let sig = Signature::new(plus, n - plus);
                for y in enumerate_signed_fillings(&lam, sig) {
                    t.check(signature_of(&y) == sig && y.shape() == &lam, || format!("{y} for {lam} {sig}"));
                }
            }
        }
    }
    t
}

fn filling_partition(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 0..=10 {
        for lam in enumerate_partitions(n) {
            let by_signature: usize =
                (0..=n).map(|plus| enumerate_signed_fillings(&lam, Signature::new(plus, n - plus)).len()).sum();
            let all = enumerate_all_fillings(&lam);
            let distinct: HashSet<_> = all.iter().collect();
            t.check(by_signature == all.len() && distinct.len() == all.len(), || format!("{lam}"));
        }
    }
    t
}

fn orbits_valid(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    let mut algebras = config.algebras();
    algebras.extend(config.simple_algebras().into_iter().map(|m| complexify_algebra(&AlgebraSpec::simple(m))));
    algebras.sort();
    algebras.dedup();
    let per = par::map(&algebras, |g| {
        let mut t = Tally::new();
        if let Some(orbits) = t.result(enumerate_orbits(g), || g.to_string()) {
            let distinct: HashSet<&OrbitIndex> = orbits.iter().collect();
            t.check(distinct.len() == orbits.len(), || format!("duplicate indices in {g}"));
            for o in &orbits {
                t.check(validate_orbit(g, o), || format!("{o} rejected by {g}"));
            }
        }
        t
    });
    per.into_iter().for_each(|x| t.absorb(x));
    t
}

/// Counts `su(p,q)` orbits from raw start-sign vectors, deduplicated as
/// multisets of `(length, sign)` rows.
pub fn su_count_brute_force(p: usize, q: usize) -> usize {
    let mut seen = HashSet::new();
    for lam in enumerate_partitions(p + q) {
        let rows = lam.parts();
        for mask in 0u64..(1u64 << rows.len()) {
            let mut plus = 0;
            let mut row_set: Vec<(usize, bool)> = Vec::with_capacity(rows.len());
            for (i, &len) in rows.iter().enumerate() {
                let starts_plus = mask & (1 << i) == 0;
                plus += if starts_plus { len.div_ceil(2) } else { len / 2 };
                row_set.push((len, starts_plus));
            }
            if plus == p {
                row_set.sort();
                seen.insert(row_set);
            }
        }
    }
    seen.len()
}

fn su_brute_force(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    if !config.families.contains(&Family::Su) {
        return t;
    }
    for m in config.simple_algebras() {
        if let SimpleAlgebra::Su(p, q) = m {
            if p + q > 12 {
                continue;
            }
            let got = enumerate_simple_orbits(m).map(|v| v.len()).unwrap_or(0);
            let expected = su_count_brute_force(p, q);
            t.check(got == expected, || format!("{m}: {got} enumerated, {expected} by brute force"));
        }
    }
    t
}

fn so_complex_counts(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for m in 3..=(2 * config.max_n) {
        let member = SimpleAlgebra::SoComplex(m);
        for lam in enumerate_partitions(m) {
            let count = orbits_with_partition(member, &lam).len();
            let expected = match (lam.even_parts_have_even_multiplicity(), lam.all_even()) {
                (false, _) => 0,
                (true, false) => 1,
                (true, true) => 2,
            };
            t.check(count == expected, || format!("{member} over {lam}: {count}"));
        }
    }
    t
}

fn product_counts(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for g in config.sum_algebras() {
        let count = |a: &AlgebraSpec| enumerate_orbits(a).map(|v| v.len()).unwrap_or(usize::MAX);
        let (a, b) = (g.summands()[0], g.summands()[1]);
        let expected = count(&a.into()) * count(&b.into());
        t.check(count(&g) == expected, || format!("{g}: {} != {expected}", count(&g)));
    }
    t
}

fn per_algebra(config: &SweepConfig, include_sums: bool, f: impl Fn(&AlgebraSpec, &mut Tally) + Sync + Send) -> Tally {
    let algebras: Vec<AlgebraSpec> = if include_sums {
        config.algebras()
    } else {
        config.simple_algebras().into_iter().map(AlgebraSpec::simple).collect()
    };
    let mut t = Tally::new();
    for part in par::map(&algebras, |g| {
        let mut t = Tally::new();
        f(g, &mut t);
        t
    }) {
        t.absorb(part);
    }
    t
}

fn partition_preservation(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    per_algebra(config, true, |g, t| {
        let Some(orbits) = t.result(enumerate_orbits(g), || g.to_string()) else { return };
        for o in &orbits {
            let Some(theta) = t.result(complexify_orbit(g, o), || format!("{g} {o}")) else { continue };
            let same = o
                .components()
                .iter()
                .zip(theta.components())
                .all(|(a, b)| a.underlying_partition() == b.underlying_partition());
            t.check(same, || format!("{g}: {o} -> {theta}"));
        }
    })
}

fn fibres_partition(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    per_algebra(config, true, |g, t| {
        let Some(real) = t.result(enumerate_orbits(g), || g.to_string()) else { return };
        let Some(complex) = t.result(enumerate_orbits(&complexify_algebra(g)), || g.to_string()) else { return };
        let mut union: Vec<OrbitIndex> = Vec::new();
        for theta in &complex {
            if let Some(f) = t.result(fibre(g, theta), || format!("{g} {theta}")) {
                union.extend(f);
            }
        }
        let distinct: HashSet<&OrbitIndex> = union.iter().collect();
        t.check(distinct.len() == union.len(), || format!("{g}: fibres overlap"));
        t.check(union.len() == real.len(), || format!("{g}: fibres cover {} of {}", union.len(), real.len()));
        if let Some(img) = t.result(image(g), || g.to_string()) {
            t.check(img.iter().all(|th| complex.contains(th)), || format!("{g}: image outside I(g_C)"));
        }
    })
}

fn split_surjective(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    per_algebra(config, true, |g, t| {
        if is_split(g) {
            if let Some(r) = t.result(is_surjective(g), || g.to_string()) {
                t.check(r.surjective, || format!("split {g} not surjective"));
            }
        }
    })
}

fn criterion_agreement(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    per_algebra(config, true, |g, t| {
        if let Some(r) = t.result(is_surjective(g), || g.to_string()) {
            t.check(r.agree, || format!("{g}: surjective={} predicate={}", r.surjective, r.theorem_predicate));
        }
    })
}

fn regular_quasi_split(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    per_algebra(config, false, |g, t| {
        if let Some(hit) = t.result(regular_in_image(g), || g.to_string()) {
            t.check(hit == is_quasi_split(g), || format!("{g}: regular hit={hit}"));
        }
    })
}

fn product_images(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for g in config.sum_algebras() {
        let (a, b) = (AlgebraSpec::simple(g.summands()[0]), AlgebraSpec::simple(g.summands()[1]));
        let (Ok(img), Ok(ia), Ok(ib)) = (image(&g), image(&a), image(&b)) else {
            t.check(false, || format!("{g}: image failed"));
            continue;
        };
        let expected: HashSet<OrbitIndex> = ia
            .iter()
            .flat_map(|x| {
                ib.iter().map(move |y| {
                    OrbitIndex::Sum(vec![x.as_simple().unwrap().clone(), y.as_simple().unwrap().clone()])
                })
            })
            .collect();
        let got: HashSet<OrbitIndex> = img.into_iter().collect();
        t.check(got == expected, || format!("{g}: image is not the product"));
        let (Ok(sg), Ok(sa), Ok(sb)) = (is_surjective(&g), is_surjective(&a), is_surjective(&b)) else { continue };
        t.check(sg.surjective == (sa.surjective && sb.surjective), || format!("{g}: surjectivity"));
    }
    t
}

fn sigma_consistency(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    per_algebra(config, false, |g, t| {
        let member = g.as_simple().unwrap();
        let Some(img) = t.result(image(g), || g.to_string()) else { return };
        let Some(complex) = t.result(enumerate_orbits(&complexify_algebra(g)), || g.to_string()) else { return };
        let img: HashSet<OrbitIndex> = img.into_iter().collect();
        let target = crate::complexify::complexify_member(member);
        for theta in &complex {
            let Some(status) = t.result(sigma_fixed(g, theta), || format!("{g} {theta}")) else { continue };
            let in_image = img.contains(theta);
            let unique = orbits_with_partition(target, &underlying_partition(theta).unwrap()).len() == 1;
            if in_image {
                t.check(status == SigmaStatus::Fixed, || format!("{g}: {theta} in image but {status:?}"));
            }
            if is_quasi_split(g) {
                let expected = if in_image { SigmaStatus::Fixed } else { SigmaStatus::NotFixed };
                t.check(status == expected, || format!("{g}: {theta} is {status:?}"));
            } else {
                let expected = if unique { SigmaStatus::Fixed } else { SigmaStatus::Unknown };
                t.check(status == expected, || format!("{g}: {theta} is {status:?}"));
            }
        }
    })
}

fn poset_axioms(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 2..=10 {
        if let Some(poset) = t.result(closure_order_sl(n), || format!("sl({n},C)")) {
            let top = poset.position(&Partition::single_row(n)).unwrap();
            let bottom = poset.position(&Partition::single_column(n)).unwrap();
            for i in 0..poset.len() {
                t.check(poset.leq(i, top), || format!("n={n}: (n) not maximum"));
                t.check(poset.leq(bottom, i), || format!("n={n}: (1^n) not minimum"));
            }
        }
    }
    t
}

fn hasse_round_trip(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 2..=10 {
        let Ok(poset) = closure_order_sl(n) else { continue };
        let k = poset.len();
        let mut closure = vec![vec![false; k]; k];
        for (i, row) in closure.iter_mut().enumerate() {
            row[i] = true;
        }
        for (upper, lower) in poset.hasse() {
            closure[lower][upper] = true;
        }
        for via in 0..k {
            for i in 0..k {
                if closure[i][via] {
                    for j in 0..k {
                        if closure[via][j] {
                            closure[i][j] = true;
                        }
                    }
                }
            }
        }
        t.check(closure == poset.relation(), || format!("n={n}: closure of Hasse diagram differs"));
    }
    t
}

fn fibre_linkage(config: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    if !config.families.contains(&Family::SlReal) {
        return t;
    }
    for n in 2..=config.max_n {
        let g = AlgebraSpec::simple(SimpleAlgebra::SlReal(n));
        let Ok(poset) = closure_order_sl(n) else { continue };
        for lam in poset.elements() {
            let theta: OrbitIndex = crate::orbit_index::SimpleOrbit::partition(lam.clone(), Default::default()).into();
            let Some(f) = t.result(fibre(&g, &theta), || format!("{g} {lam}")) else { continue };
            let positions: HashSet<Option<usize>> =
                f.iter().map(|o| poset.position(&underlying_partition(o).unwrap())).collect();
            t.check(positions.len() == 1 && !positions.contains(&None), || format!("{g}: fibre over {lam}"));
        }
    }
    t
}

/// `n² − Σ (λᵀ)ᵢ²`.
pub fn sl_orbit_dim_closed_form(lambda: &Partition) -> usize {
    let n = lambda.total();
    n * n - transpose(lambda).parts().iter().map(|c| c * c).sum::<usize>()
}

fn sl_closed_form(_: &SweepConfig, oracle: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    let work: Vec<Partition> = (2..=7).flat_map(enumerate_partitions).collect();
    for part in par::map(&work, |lam| {
        let mut t = Tally::new();
        let member = SimpleAlgebra::SlComplex(lam.total());
        if let Some(r) = t.result(oracle.complex_report(member, lam), || lam.to_string()) {
            let closed = sl_orbit_dim_closed_form(lam);
            t.check(r.orbit_dim == closed, || format!("{lam}: oracle {} closed form {closed}", r.orbit_dim));
        }
        t
    }) {
        t.absorb(part);
    }
    t
}

fn block_order_independence(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 2..=5 {
        for lam in enumerate_partitions(n) {
            let family = MatrixFamily::SpecialLinear(n);
            let reference = centralizer_dimension(&jordan_from_blocks(lam.parts()), family).unwrap();
            let mut reversed = lam.parts().to_vec();
            reversed.reverse();
            let mut rotated = lam.parts().to_vec();
            rotated.rotate_left(1);
            for order in [reversed, rotated] {
                let r = centralizer_dimension(&jordan_from_blocks(&order), family).unwrap();
                t.check(r == reference, || format!("{lam} vs blocks {order:?}"));
            }
        }
    }
    t
}

fn orthogonal_postconditions(_: &SweepConfig, _: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    let work: Vec<Partition> = (3..=10)
        .flat_map(enumerate_partitions)
        .filter(Partition::even_parts_have_even_multiplicity)
        .collect();
    for part in par::map(&work, |lam| {
        let mut t = Tally::new();
        let m = lam.total();
        if let Some(x) = t.result(orthogonal_representative(lam, m), || lam.to_string()) {
            t.check(preserves_form(&x, &antidiagonal_form(m)), || format!("{lam}: form"));
            let expected = expected_rank_sequence(lam);
            t.check(rank_sequence(&x, expected.len()) == expected, || format!("{lam}: ranks"));
        }
        t
    }) {
        t.absorb(part);
    }
    t
}

fn even_dimensions(config: &SweepConfig, oracle: &DimensionOracle) -> Tally {
    let bound = config.max_n.min(ORACLE_PARAMETER_BOUND);
    let mut work: Vec<(SimpleAlgebra, Partition)> = Vec::new();
    for n in 2..=bound.max(7) {
        work.extend(enumerate_partitions(n).into_iter().map(|l| (SimpleAlgebra::SlComplex(n), l)));
    }
    for m in 3..=8 {
        work.extend(
            enumerate_partitions(m)
                .into_iter()
                .filter(Partition::even_parts_have_even_multiplicity)
                .map(|l| (SimpleAlgebra::SoComplex(m), l)),
        );
    }
    let mut t = Tally::new();
    for part in par::map(&work, |(member, lam)| {
        let mut t = Tally::new();
        if let Some(r) = t.result(oracle.complex_report(*member, lam), || format!("{member} {lam}")) {
            t.check(r.orbit_dim_is_even(), || format!("{member} {lam}: dim {}", r.orbit_dim));
        }
        t
    }) {
        t.absorb(part);
    }
    t
}

fn dimension_monotone(_: &SweepConfig, oracle: &DimensionOracle) -> Tally {
    let mut t = Tally::new();
    for n in 2..=7 {
        let member = SimpleAlgebra::SlComplex(n);
        let all = enumerate_partitions(n);
        let dims: Vec<Option<usize>> = all.iter().map(|l| oracle.complex_report(member, l).ok().map(|r| r.orbit_dim)).collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                if i != j && dominates(a, b).unwrap() {
                    t.check(dims[i] > dims[j] && dims[j].is_some(), || format!("{a} > {b} but dims {:?} {:?}", dims[i], dims[j]));
                }
            }
        }
    }
    t
}

fn fibres_equidimensional(config: &SweepConfig, oracle: &DimensionOracle) -> Tally {
    let members = config.simple_algebras_up_to(config.max_n.min(ORACLE_PARAMETER_BOUND));
    let mut work: Vec<(SimpleAlgebra, OrbitIndex)> = Vec::new();
    for &m in &members {
        let target = AlgebraSpec::simple(crate::complexify::complexify_member(m));
        if let Ok(complex) = enumerate_orbits(&target) {
            work.extend(complex.into_iter().map(|theta| (m, theta)));
        }
    }
    let mut t = Tally::new();
    for part in par::map(&work, |(m, theta)| {
        let mut t = Tally::new();
        if let Some(r) = t.result(oracle.verify_fibre_equidimensional(*m, theta), || format!("{m} {theta}")) {
            t.check(r.equidimensional, || format!("{m} over {theta}: {:?}", r.dimensions));
        }
        t
    }) {
        t.absorb(part);
    }
    t
}
