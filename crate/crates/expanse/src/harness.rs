//! Per-theorem verification harnesses and the seeded property suites behind
//! the acceptance gate and the `sweep` command.
//!
//! Every suite is deterministic for a fixed seed: instances are drawn from a
//! ChaCha stream and enumerations run in canonical order, so two runs of the
//! same binary produce identical reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::expansion::{contract_vector, expand_ideal, expand_set, expand_vector, relabel_iterated, ExpansionShape};
use crate::ideal_props::{
    find_linear_quotients_order, find_weakly_polymatroidal_order, is_k_decomposable,
    is_polymatroidal,
};
use crate::monoset::{minimalize, MonomialIdeal, MonomialSet};
use crate::order::TermOrder;
use crate::polymatroid::{
    check_white, expand_bases, fiber_connected_oracle, oracle_degree_bound, validate_base_set,
    BaseSet,
};
use crate::semigroup::{is_normal_up_to, krull_dimension, verify_theorem_normal, NormalityVerdict};
use crate::sortable::{is_sortable, sort_commutes_with_contraction, verify_sorting_generation, verify_theorem_sort};
use crate::toric::{
    contract_gb, expand_gb, expanded_base_order, toric_gb, verify_gb, verify_pi0, Budget, SplitGb,
    DEFAULT_BUDGET,
};
use crate::vector::ExponentVector;

/// Outcome of one property suite: instance count and the violations found.
/// An empty violation list is the only acceptable outcome for the theorems.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub instances: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

// ---------------------------------------------------------------------------
// per-instance theorem harnesses

/// Polymatroidality transfers both ways along the expansion.
pub fn verify_poly_transfer(ideal: &MonomialIdeal, shape: &ExpansionShape) -> Result<bool> {
    let expanded = expand_ideal(ideal, shape)?;
    Ok(is_polymatroidal(ideal) == is_polymatroidal(&expanded))
}

/// Weak polymatroidality transfers both ways along the expansion. The order
/// search on the expanded side runs with its own ambient dimension as limit.
pub fn verify_wp_transfer(ideal: &MonomialIdeal, shape: &ExpansionShape) -> Result<bool> {
    let expanded = expand_ideal(ideal, shape)?;
    let before = find_weakly_polymatroidal_order(ideal, ideal.dim())?.is_some();
    let after = find_weakly_polymatroidal_order(&expanded, expanded.dim())?.is_some();
    Ok(before == after)
}

/// Linear quotients transfer both ways along the expansion.
pub fn verify_lq_transfer(ideal: &MonomialIdeal, shape: &ExpansionShape) -> Result<bool> {
    let expanded = expand_ideal(ideal, shape)?;
    let limit = ideal.num_gens().max(expanded.num_gens());
    let before = find_linear_quotients_order(ideal, limit)?.is_some();
    let after = find_linear_quotients_order(&expanded, limit)?.is_some();
    Ok(before == after)
}

/// Linear quotients and k-decomposability for some `k ≤ n−1` are equivalent.
pub fn verify_decomposability(ideal: &MonomialIdeal) -> Result<bool> {
    let lq = find_linear_quotients_order(ideal, ideal.num_gens().max(1))?.is_some();
    let k = ideal.dim().saturating_sub(1);
    let kd = is_k_decomposable(ideal, k, ideal.num_gens().max(1))?.is_some();
    Ok(lq == kd)
}

/// The reduced basis of the expanded toric ideal contracts onto the reduced
/// basis of the source, member for member under the coordinate relabeling.
pub fn verify_ohh_contraction(
    config: &MonomialSet,
    shape: &ExpansionShape,
    budget: &mut Budget,
) -> Result<bool> {
    let base = TermOrder::lex(config.dim());
    let expanded = expand_set(config, shape)?;
    let exp_base = expanded_base_order(&base, shape);
    let g_exp = toric_gb(expanded.set(), &exp_base, budget)?;

    let unit_positions: Vec<usize> = (0..config.dim()).map(|i| shape.flat(i, 0)).collect();
    let contracted = contract_gb(&g_exp, &unit_positions)?;

    let back = |v: &ExponentVector| -> ExponentVector {
        ExponentVector::new(unit_positions.iter().map(|&p| v.entry(p)).collect())
    };
    let mut got: Vec<(Vec<ExponentVector>, Vec<ExponentVector>)> = contracted
        .elements_as_monomials()
        .into_iter()
        .map(|(p, m)| (p.iter().map(&back).collect(), m.iter().map(&back).collect()))
        .collect();
    got.sort();

    let g = toric_gb(config, &base, budget)?;
    let mut want = g.elements_as_monomials();
    want.sort();
    Ok(got == want)
}

/// Runs the split-and-lift construction and checks the result is a Gröbner
/// basis of the expanded toric ideal.
pub fn verify_grob_exp(
    config: &MonomialSet,
    shape: &ExpansionShape,
    budget: &mut Budget,
) -> Result<(bool, SplitGb)> {
    let base = TermOrder::lex(config.dim());
    let g = toric_gb(config, &base, budget)?;
    let out = expand_gb(config, &g, shape, budget)?;
    let exp_base = expanded_base_order(&base, shape);
    let ok = verify_gb(out.basis.elements(), out.basis.config(), &exp_base, budget)?;
    Ok((ok, out))
}

/// Krull dimension never drops along the expansion.
pub fn verify_dim_transfer(config: &MonomialSet, shape: &ExpansionShape) -> Result<bool> {
    let expanded = expand_set(config, shape)?;
    Ok(krull_dimension(config) <= krull_dimension(expanded.set()))
}

// ---------------------------------------------------------------------------
// samplers

fn random_vector(rng: &mut ChaCha8Rng, dim: usize, max_entry: u32) -> ExponentVector {
    loop {
        let entries: Vec<u32> = (0..dim).map(|_| rng.random_range(0..=max_entry)).collect();
        if entries.iter().any(|&e| e > 0) {
            return ExponentVector::new(entries);
        }
    }
}

fn random_alpha(rng: &mut ChaCha8Rng, dim: usize, max_entry: u32) -> ExpansionShape {
    let blocks: Vec<u32> = (0..dim).map(|_| rng.random_range(1..=max_entry)).collect();
    ExpansionShape::new(blocks).expect("entries are positive")
}

fn all_vectors_of_modulus(dim: usize, d: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; dim];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(ExponentVector::from_slice(cur));
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Bases of a truncated product of simplices: all vectors of modulus `d`
/// below the cap. These always satisfy the exchange axiom, giving the
/// samplers a supply of genuinely polymatroidal instances.
fn capped_bases(cap: &ExponentVector, d: u32) -> Vec<ExponentVector> {
    all_vectors_of_modulus(cap.dim(), d)
        .into_iter()
        .filter(|v| v.divides(cap).then(|| ()).is_some() || v.entries().iter().zip(cap.entries()).all(|(a, b)| a <= b))
        .collect()
}

/// A random monomial ideal mixing plain antichains with polymatroidal ideals
/// built from capped base sets and their Minkowski sums, so both verdicts of
/// every transfer theorem show up.
fn random_transfer_ideal(rng: &mut ChaCha8Rng, dim: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    loop {
        let ideal = match rng.random_range(0..4u32) {
            0 | 1 => {
                let count = rng.random_range(1..=max_gens);
                let vs: Vec<ExponentVector> =
                    (0..count).map(|_| random_vector(rng, dim, max_exp)).collect();
                MonomialIdeal::new(dim, vs).expect("dims agree")
            }
            2 => {
                let cap = random_vector(rng, dim, 2);
                let d = rng.random_range(1..=cap.modulus().min(3) as u32);
                MonomialIdeal::new(dim, capped_bases(&cap, d)).expect("dims agree")
            }
            _ => {
                let cap_a = random_vector(rng, dim, 1);
                let cap_b = random_vector(rng, dim, 1);
                let da = rng.random_range(1..=cap_a.modulus() as u32);
                let db = rng.random_range(1..=cap_b.modulus() as u32);
                let sums: Vec<ExponentVector> = capped_bases(&cap_a, da)
                    .iter()
                    .flat_map(|u| capped_bases(&cap_b, db).iter().map(|v| u.plus(v)).collect::<Vec<_>>())
                    .collect();
                MonomialIdeal::new(dim, sums).expect("dims agree")
            }
        };
        if ideal.num_gens() >= 1 && ideal.num_gens() <= max_gens {
            return ideal;
        }
    }
}

fn expanded_gen_count(ideal: &MonomialIdeal, shape: &ExpansionShape) -> u64 {
    fn binom(n: u64, k: u64) -> u64 {
        let k = k.min(n - k);
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }
    ideal
        .gens()
        .iter()
        .map(|g| {
            (0..ideal.dim())
                .map(|i| {
                    let k = u64::from(shape.blocks()[i]);
                    binom(u64::from(g.entry(i)) + k - 1, k - 1)
                })
                .product::<u64>()
        })
        .sum()
}

/// A random divisibility-minimal configuration.
fn random_min_config(
    rng: &mut ChaCha8Rng,
    dim: usize,
    max_members: usize,
    max_deg: u32,
) -> MonomialSet {
    loop {
        let count = rng.random_range(2..=max_members);
        let vs: Vec<ExponentVector> = (0..count)
            .map(|_| {
                let d = rng.random_range(1..=max_deg);
                let picks = all_vectors_of_modulus(dim, d);
                picks[rng.random_range(0..picks.len())].clone()
            })
            .collect();
        let min = minimalize(dim, &vs).expect("dims agree");
        if min.len() >= 2 {
            return min;
        }
    }
}

// ---------------------------------------------------------------------------
// suites

/// Transfer of polymatroidality, weak polymatroidality and linear quotients
/// over random ideals and shapes, plus the implication ladder on each source
/// ideal.
pub fn suite_transfer(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for idx in 0..instances {
        let (ideal, shape) = loop {
            let dim = rng.random_range(2..=4usize);
            let ideal = random_transfer_ideal(&mut rng, dim, 6, 3);
            let shape = random_alpha(&mut rng, dim, 3);
            // keep both order searches within reach: the subset-state searches
            // are exponential in these quantities
            if shape.total_dim() <= 12 && expanded_gen_count(&ideal, &shape) <= 12 {
                break (ideal, shape);
            }
        };
        let tag = |what: &str| {
            format!("instance {idx}: {what} transfer violated for {ideal:?} alpha {:?}", shape.blocks())
        };
        if !verify_poly_transfer(&ideal, &shape)? {
            violations.push(tag("polymatroidal"));
        }
        if !verify_wp_transfer(&ideal, &shape)? {
            violations.push(tag("weakly-polymatroidal"));
        }
        if !verify_lq_transfer(&ideal, &shape)? {
            violations.push(tag("linear-quotients"));
        }
        // implication ladder on the source side
        let poly = is_polymatroidal(&ideal);
        let wp = find_weakly_polymatroidal_order(&ideal, ideal.dim())?.is_some();
        let lq = find_linear_quotients_order(&ideal, ideal.num_gens())?.is_some();
        if (poly && !wp) || (wp && !lq) {
            violations.push(tag("implication ladder"));
        }
    }
    Ok(SuiteReport { name: "transfer", instances, violations })
}

/// Equivalence of linear quotients and k-decomposability on small random
/// ideals.
pub fn suite_decomposability(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for idx in 0..instances {
        let ideal = loop {
            let dim = rng.random_range(2..=4usize);
            let candidate = random_transfer_ideal(&mut rng, dim, 6, 3);
            if candidate.num_gens() <= 6 {
                break candidate;
            }
        };
        if !verify_decomposability(&ideal)? {
            violations.push(format!("instance {idx}: decomposability mismatch for {ideal:?}"));
        }
    }
    Ok(SuiteReport { name: "decomposability", instances, violations })
}

/// Contraction of the expanded reduced basis onto the source basis over
/// random configurations.
pub fn suite_contraction(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for idx in 0..instances {
        let (config, shape) = loop {
            let dim = rng.random_range(2..=4usize);
            let config = random_min_config(&mut rng, dim, 6, 4);
            let shape = random_alpha(&mut rng, dim, 2);
            let expanded: u64 = config
                .iter()
                .map(|g| expand_vector(g, &shape).map(|v| v.len() as u64).unwrap_or(u64::MAX))
                .sum();
            if expanded <= 24 {
                break (config, shape);
            }
        };
        let mut budget = Budget::new(DEFAULT_BUDGET);
        if !verify_ohh_contraction(&config, &shape, &mut budget)? {
            violations.push(format!(
                "instance {idx}: contraction mismatch for {config:?} alpha {:?}",
                shape.blocks()
            ));
        }
    }
    Ok(SuiteReport { name: "contraction", instances, violations })
}

/// Exhaustive double-swap sweep: every valid base set with ground size,
/// modulus and base count below the given caps is checked for agreement of
/// the ideal-theoretic test with the fiber oracle, and the expansion
/// implication is checked for every shape with entries at most 2.
pub fn suite_white(max_n: usize, max_modulus: u32, max_bases: usize) -> Result<SuiteReport> {
    let mut violations = Vec::new();
    let mut instances = 0usize;
    for n in 1..=max_n {
        for d in 1..=max_modulus {
            let pool = all_vectors_of_modulus(n, d);
            let mut picks = vec![0usize; max_bases.min(pool.len())];
            subsets(pool.len(), &mut picks, 0, 0, &mut |chosen| {
                let members: Vec<ExponentVector> =
                    chosen.iter().map(|&i| pool[i].clone()).collect();
                let set = MonomialSet::new(n, members).expect("dims agree");
                if validate_base_set(&set).is_some() {
                    return Ok(());
                }
                let b = BaseSet::new(set)?;
                instances += 1;
                let base = TermOrder::lex(n);
                let mut budget = Budget::new(DEFAULT_BUDGET);
                let white = check_white(&b, &base, &mut budget)?;
                let bound = oracle_degree_bound(&b, &base, &mut budget)?;
                let oracle = fiber_connected_oracle(&b, bound, 1 << 24)?.is_none();
                if white != oracle {
                    violations.push(format!(
                        "oracle disagreement on bases {:?}: ideal test {white}, fibers {oracle}",
                        b.bases()
                    ));
                }
                if white {
                    for alpha in shapes_up_to(n, 2) {
                        let expanded = expand_bases(&b, &alpha)?;
                        let order = expanded_base_order(&base, &alpha);
                        let mut budget = Budget::new(DEFAULT_BUDGET);
                        if !check_white(&expanded, &order, &mut budget)? {
                            violations.push(format!(
                                "double-swap generation lost under alpha {:?} for bases {:?}",
                                alpha.blocks(),
                                b.bases()
                            ));
                        }
                    }
                }
                Ok(())
            })?;
        }
    }
    Ok(SuiteReport { name: "white", instances, violations })
}

/// All nonempty subsets of `0..n` of size at most `picks.len()`, visited in
/// canonical order.
fn subsets(
    n: usize,
    picks: &mut Vec<usize>,
    depth: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    for i in start..n {
        picks[depth] = i;
        f(&picks[..=depth])?;
        if depth + 1 < picks.len() {
            subsets(n, picks, depth + 1, i + 1, f)?;
        }
    }
    Ok(())
}

/// All shapes over `n` blocks with entries in `1..=max`.
fn shapes_up_to(n: usize, max: u32) -> Vec<ExpansionShape> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; n];
    fn rec(pos: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<ExpansionShape>) {
        if pos == cur.len() {
            out.push(ExpansionShape::new(cur.clone()).expect("positive entries"));
            return;
        }
        for e in 1..=max {
            cur[pos] = e;
            rec(pos + 1, max, cur, out);
        }
    }
    rec(0, max, &mut cur, &mut out);
    out
}

/// Exhaustive sortability sweep over the subsets of the degree-2 monomials in
/// up to three variables: the sortability transfer for every shape with
/// entries at most 2, sorting generation for every sortable member and its
/// sortable expansions, and commutation of sorting with contraction.
pub fn suite_sort() -> Result<SuiteReport> {
    let mut violations = Vec::new();
    let mut instances = 0usize;
    for n in 1..=3usize {
        let pool = all_vectors_of_modulus(n, 2);
        let mut picks = vec![0usize; pool.len()];
        subsets(pool.len(), &mut picks, 0, 0, &mut |chosen| {
            let members: Vec<ExponentVector> = chosen.iter().map(|&i| pool[i].clone()).collect();
            let a = MonomialSet::new(n, members).expect("dims agree");
            instances += 1;
            for shape in shapes_up_to(n, 2) {
                if !verify_theorem_sort(&a, &shape)? {
                    violations.push(format!(
                        "sortability transfer violated for {a:?} alpha {:?}",
                        shape.blocks()
                    ));
                }
                if !sort_commutes_with_contraction(&a, &shape)? {
                    violations.push(format!(
                        "sorting does not commute with contraction for {a:?} alpha {:?}",
                        shape.blocks()
                    ));
                }
                if is_sortable(&a)?.is_none() {
                    let expanded = expand_set(&a, &shape)?;
                    let base = TermOrder::lex(expanded.set().dim());
                    let mut budget = Budget::new(DEFAULT_BUDGET);
                    if !verify_sorting_generation(expanded.set(), &base, &mut budget)? {
                        violations.push(format!(
                            "sorting relations fail to generate for expansion of {a:?} alpha {:?}",
                            shape.blocks()
                        ));
                    }
                }
            }
            if is_sortable(&a)?.is_none() {
                let mut budget = Budget::new(DEFAULT_BUDGET);
                if !verify_sorting_generation(&a, &TermOrder::lex(n), &mut budget)? {
                    violations.push(format!("sorting relations fail to generate for {a:?}"));
                }
            }
            Ok(())
        })?;
    }
    Ok(SuiteReport { name: "sort", instances, violations })
}

/// The golden normality witness plus the normality transfer on random
/// equigenerated configurations at a matched bound.
pub fn suite_normal(seed: u64, instances: usize, bound: u32) -> Result<SuiteReport> {
    let mut violations = Vec::new();
    let golden = MonomialSet::new(
        2,
        vec![
            ExponentVector::new(vec![3, 0]),
            ExponentVector::new(vec![2, 1]),
            ExponentVector::new(vec![0, 3]),
        ],
    )?;
    match is_normal_up_to(&golden, 9)? {
        NormalityVerdict::NotNormal(w) if w == ExponentVector::new(vec![1, 2]) => {}
        other => violations.push(format!("golden witness mismatch: {other:?}")),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..instances {
        let dim = rng.random_range(2..=3usize);
        let d = rng.random_range(2..=3u32);
        let pool = all_vectors_of_modulus(dim, d);
        let count = rng.random_range(2..=4usize.min(pool.len()));
        let mut chosen: Vec<ExponentVector> = Vec::new();
        while chosen.len() < count {
            let pick = pool[rng.random_range(0..pool.len())].clone();
            if !chosen.contains(&pick) {
                chosen.push(pick);
            }
        }
        let a = MonomialSet::new(dim, chosen)?;
        let shape = random_alpha(&mut rng, dim, 2);
        if !verify_theorem_normal(&a, &shape, bound)? {
            violations.push(format!(
                "instance {idx}: normality transfer violated for {a:?} alpha {:?}",
                shape.blocks()
            ));
        }
    }
    Ok(SuiteReport { name: "normal", instances: instances + 1, violations })
}

/// Structural identities: the expansion counting identity and contraction
/// inverse over an exhaustive grid, the relabeling composition law and the
/// input-order invariance of reduced bases on random instances, and the
/// block-sum flattening of expanded toric ideals on small fixed instances.
pub fn suite_structural(seed: u64) -> Result<SuiteReport> {
    let mut violations = Vec::new();
    let mut instances = 0usize;

    fn binom(n: u64, k: u64) -> u64 {
        let k = k.min(n - k);
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    for dim in 1..=3usize {
        let mut entries = vec![0u32; dim];
        let mut blocks = vec![1u32; dim];
        loop {
            // iterate u over {0..4}^dim
            let u = ExponentVector::from_slice(&entries);
            loop {
                // iterate alpha over {1..3}^dim
                let shape = ExpansionShape::new(blocks.clone())?;
                instances += 1;
                let expanded = expand_vector(&u, &shape)?;
                let want: u64 = (0..dim)
                    .map(|i| {
                        let k = u64::from(shape.blocks()[i]);
                        binom(u64::from(u.entry(i)) + k - 1, k - 1)
                    })
                    .product();
                if expanded.len() as u64 != want {
                    violations.push(format!("counting identity fails for {u:?} alpha {blocks:?}"));
                }
                if expanded.iter().any(|w| contract_vector(w, &shape).unwrap() != u) {
                    violations.push(format!("contraction inverse fails for {u:?} alpha {blocks:?}"));
                }
                if !advance(&mut blocks, 1, 3) {
                    break;
                }
            }
            if !advance(&mut entries, 0, 4) {
                break;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..20 {
        let dim = rng.random_range(2..=3usize);
        let a = random_min_config(&mut rng, dim, 4, 3);
        let shape = random_alpha(&mut rng, dim, 2);
        let block = rng.random_range(0..dim);
        instances += 1;

        // relabeled double expansion equals the single expansion
        let sigma = relabel_iterated(&shape, block)?;
        let inner = expand_set(&a, &shape)?;
        let split_pos = shape.flat(block, shape.blocks()[block] as usize - 1);
        let mut gamma = vec![1u32; shape.total_dim()];
        gamma[split_pos] = 2;
        let double = expand_set(inner.set(), &ExpansionShape::new(gamma)?)?;
        let relabeled = MonomialSet::new(
            shape.total_dim() + 1,
            double.set().iter().map(|w| sigma.apply(w)).collect(),
        )?;
        let beta = shape.plus_unit(block)?;
        let single = expand_set(&a, &beta)?;
        if &relabeled != single.set() {
            violations.push(format!(
                "instance {idx}: relabeling law fails for {a:?} alpha {:?} block {block}",
                shape.blocks()
            ));
        }

        // reduced bases do not depend on generator input order
        let mut shuffled = a.members().to_vec();
        shuffled.reverse();
        let b = MonomialSet::new(dim, shuffled)?;
        let mut budget = Budget::new(DEFAULT_BUDGET);
        let ga = toric_gb(&a, &TermOrder::lex(dim), &mut budget)?;
        let gb = toric_gb(&b, &TermOrder::lex(dim), &mut budget)?;
        if ga.elements() != gb.elements() {
            violations.push(format!("instance {idx}: basis depends on input order for {a:?}"));
        }
    }

    // block-sum flattening of the expanded toric ideal generates the source
    let pi0_cases: Vec<(Vec<Vec<u32>>, Vec<u32>)> = vec![
        (
            vec![vec![2, 1, 0, 0], vec![1, 1, 0, 1], vec![1, 0, 1, 0], vec![0, 1, 2, 0], vec![0, 1, 0, 2]],
            vec![1, 1, 1, 2],
        ),
        (vec![vec![1, 1]], vec![2, 2]),
        (vec![vec![2, 0], vec![1, 1], vec![0, 2]], vec![2, 1]),
    ];
    for (rows, blocks) in pi0_cases {
        instances += 1;
        let dim = rows[0].len();
        let a = MonomialSet::new(dim, rows.into_iter().map(ExponentVector::new).collect())?;
        let shape = ExpansionShape::new(blocks)?;
        let mut budget = Budget::new(DEFAULT_BUDGET);
        if !verify_pi0(&a, &shape, &TermOrder::lex(dim), &mut budget)? {
            violations.push(format!("flattening fails to generate for {a:?}"));
        }
    }

    Ok(SuiteReport { name: "structural", instances, violations })
}

/// Odometer step over `lo..=hi` per digit; false when the counter wraps.
fn advance(digits: &mut [u32], lo: u32, hi: u32) -> bool {
    for d in digits.iter_mut() {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transfer_suite_small_run() {
        let report = suite_transfer(7, 10).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn decomposability_suite_small_run() {
        let report = suite_decomposability(11, 8).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn contraction_suite_small_run() {
        let report = suite_contraction(3, 3).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn normal_suite_small_run() {
        let report = suite_normal(5, 3, 8).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn structural_suite_run() {
        let report = suite_structural(9).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn white_suite_tiny_run() {
        // ground size up to 2 keeps this a smoke test
        let report = suite_white(2, 2, 4).unwrap();
        assert!(report.instances > 0);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn sort_suite_tiny_smoke() {
        // full run is in the acceptance gate
        let report = suite_sort().unwrap();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    #[ignore = "scale probe; run explicitly"]
    fn white_suite_full_probe() {
        let start = std::time::Instant::now();
        let report = suite_white(4, 3, 6).unwrap();
        println!(
            "white sweep: {} valid base sets, {} violations, {:?}",
            report.instances,
            report.violations.len(),
            start.elapsed()
        );
        assert!(report.passed(), "{:?}", report.violations);
    }
}
