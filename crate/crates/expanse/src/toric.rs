//! Toric ideals of monomial configurations: binomial Buchberger with
//! elimination, reduced Gröbner bases, normal forms, generation tests, the
//! combinatorial-pure-subring contraction and the split-and-lift construction
//! of Gröbner bases for expanded configurations.
//!
//! A single algorithm (Buchberger over binomials) serves computation,
//! verification and membership, so there is exactly one trusted core. All
//! intermediates stay binomial: an S-polynomial of two binomials is again a
//! difference of two monomials and binomial reduction rewrites one monomial
//! into another, so the representation below cannot even express a
//! non-binomial.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::expansion::{expand_set, relabel_iterated, ExpansionShape};
use crate::monoset::MonomialSet;
use crate::order::TermOrder;
use crate::vector::ExponentVector;

/// Default cap on the number of S-pairs a single operation may process.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Mutable S-pair budget threaded through one public operation.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExhausted { limit: self.limit });
        }
        Ok(())
    }
}

/// A formal difference of two multisets of configuration indices: the
/// binomial `∏ y_{plus} − ∏ y_{minus}` with coefficients fixed at `+1/−1`.
///
/// The two sides share no index and the leading side under the ambient order
/// is `plus`; the zero binomial is not representable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YBinomial {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl YBinomial {
    /// Cancels common indices, orients the leading side to `plus` under
    /// `order`, and returns `None` for the zero binomial.
    pub fn normalized(
        plus: Vec<usize>,
        minus: Vec<usize>,
        config: &MonomialSet,
        order: &TermOrder,
    ) -> Result<Option<Self>> {
        let m = config.len();
        for &i in plus.iter().chain(minus.iter()) {
            if i >= m {
                return Err(Error::IndexOutOfRange { index: i, len: m });
            }
        }
        let mut p = counts(&plus, m);
        let mut q = counts(&minus, m);
        for i in 0..m {
            let c = p[i].min(q[i]);
            p[i] -= c;
            q[i] -= c;
        }
        if p == q {
            return Ok(None);
        }
        let (p, q) = match order.cmp_raw(&p, &q) {
            Ordering::Greater => (p, q),
            Ordering::Less => (q, p),
            Ordering::Equal => unreachable!("order is total on distinct monomials"),
        };
        Ok(Some(YBinomial { plus: uncounts(&p), minus: uncounts(&q) }))
    }

    pub fn plus(&self) -> &[usize] {
        &self.plus
    }

    pub fn minus(&self) -> &[usize] {
        &self.minus
    }

    /// Total degree of the binomial: the longer of the two sides.
    pub fn degree(&self) -> usize {
        self.plus.len().max(self.minus.len())
    }

    /// Renders against the configuration, e.g. `y[x1^2*x2]*y[x2*x4^2] - y[x1*x2*x4]^2`.
    /// Factors appear largest monomial first.
    pub fn display(&self, config: &MonomialSet) -> String {
        fn side(indices: &[usize], config: &MonomialSet) -> String {
            if indices.is_empty() {
                return "1".into();
            }
            // indices are ascending in the canonical member order; print the
            // largest monomial first
            let rev: Vec<usize> = indices.iter().rev().copied().collect();
            let mut parts: Vec<String> = Vec::new();
            let mut i = 0;
            while i < rev.len() {
                let j = rev[i..].iter().take_while(|&&x| x == rev[i]).count();
                let name = format!("y[{}]", config.member(rev[i]));
                parts.push(if j == 1 { name } else { format!("{name}^{j}") });
                i += j;
            }
            parts.join("*")
        }
        format!("{} - {}", side(&self.plus, config), side(&self.minus, config))
    }
}

fn counts(indices: &[usize], m: usize) -> Vec<u32> {
    let mut c = vec![0u32; m];
    for &i in indices {
        c[i] = c[i].checked_add(1).expect("y-exponent overflow");
    }
    c
}

fn uncounts(c: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &e) in c.iter().enumerate() {
        for _ in 0..e {
            out.push(i);
        }
    }
    out
}

/// Membership of a binomial in the toric ideal: both sides must have the same
/// exponent-vector sum.
pub fn kernel_test(b: &YBinomial, config: &MonomialSet) -> Result<bool> {
    let m = config.len();
    let sum = |side: &[usize]| -> Result<Vec<u64>> {
        let mut acc = vec![0u64; config.dim()];
        for &i in side {
            if i >= m {
                return Err(Error::IndexOutOfRange { index: i, len: m });
            }
            for (a, &e) in acc.iter_mut().zip(config.member(i).entries()) {
                *a += u64::from(e);
            }
        }
        Ok(acc)
    };
    Ok(sum(&b.plus)? == sum(&b.minus)?)
}

/// A Gröbner basis of the toric ideal of a configuration under an induced
/// order on the `y`-variables. `reduced` marks the interreduced basis
/// computed by [`toric_gb`]; the split-and-lift construction returns a basis
/// that is generally not reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    config: MonomialSet,
    order: TermOrder,
    elements: Vec<YBinomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn config(&self) -> &MonomialSet {
        &self.config
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[YBinomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn max_degree(&self) -> usize {
        self.elements.iter().map(YBinomial::degree).max().unwrap_or(0)
    }

    /// Element sides resolved to monomials, for comparisons across relabeled
    /// ambient spaces.
    pub fn elements_as_monomials(&self) -> Vec<(Vec<ExponentVector>, Vec<ExponentVector>)> {
        self.elements
            .iter()
            .map(|b| {
                let resolve = |side: &[usize]| -> Vec<ExponentVector> {
                    side.iter().map(|&i| self.config.member(i).clone()).collect()
                };
                (resolve(&b.plus), resolve(&b.minus))
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// internal binomial arithmetic over flat exponent rows

type Mono = Vec<u32>;

/// Folded support bitmask used to reject most divisibility candidates with a
/// single AND; collisions beyond 128 variables only weaken the filter.
fn support_mask(m: &[u32]) -> u128 {
    let mut mask = 0u128;
    for (i, &e) in m.iter().enumerate() {
        if e != 0 {
            mask |= 1u128 << (i & 127);
        }
    }
    mask
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bin {
    plus: Mono,
    minus: Mono,
    hmask: u128,
}

/// Comparator for the internal Buchberger runs. Plain priority lex serves the
/// `y`-subring; the elimination runs compare the `x`-block first by degrevlex
/// (any block order eliminates, and degrevlex keeps the intermediate
/// computation small) and break ties by the pinned `y`-order.
#[derive(Clone)]
enum Cmp {
    Priority(Vec<usize>),
    Elimination { xdim: usize, y_priority: Vec<usize> },
}

fn cmp_priority(priority: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &i in priority {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn cmp_degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db) = (mono_deg(a), mono_deg(b));
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            // smaller exponent at the last difference wins under revlex
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl Cmp {
    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            Cmp::Priority(priority) => cmp_priority(priority, a, b),
            Cmp::Elimination { xdim, y_priority } => {
                cmp_degrevlex(&a[..*xdim], &b[..*xdim])
                    .then_with(|| cmp_priority(y_priority, &a[*xdim..], &b[*xdim..]))
            }
        }
    }
}

fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
        .collect()
}

fn mono_div(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mono_lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_deg(a: &[u32]) -> u64 {
    a.iter().map(|&x| u64::from(x)).sum()
}

impl Bin {
    fn new(plus: Mono, minus: Mono) -> Bin {
        let hmask = support_mask(&plus);
        Bin { plus, minus, hmask }
    }

    fn oriented(a: Mono, b: Mono, cmp: &Cmp) -> Option<Bin> {
        match cmp.cmp(&a, &b) {
            Ordering::Greater => Some(Bin::new(a, b)),
            Ordering::Less => Some(Bin::new(b, a)),
            Ordering::Equal => None,
        }
    }
}

/// The head-minimal reduction rules packed into contiguous arrays, so a
/// divisor scan is a linear sweep over the mask vector instead of a pointer
/// chase through scattered heap buffers.
struct ReducerSet {
    width: usize,
    masks: Vec<u128>,
    heads: Vec<u32>,
    tails: Vec<u32>,
    dead: usize,
}

impl ReducerSet {
    fn new(width: usize) -> Self {
        ReducerSet { width, masks: Vec::new(), heads: Vec::new(), tails: Vec::new(), dead: 0 }
    }

    fn from_bins(width: usize, bins: &[Bin]) -> Self {
        let mut set = Self::new(width);
        for b in bins {
            set.push(b);
        }
        set
    }

    fn len(&self) -> usize {
        self.masks.len()
    }

    fn head(&self, i: usize) -> &[u32] {
        &self.heads[i * self.width..(i + 1) * self.width]
    }

    fn tail(&self, i: usize) -> &[u32] {
        &self.tails[i * self.width..(i + 1) * self.width]
    }

    fn push(&mut self, b: &Bin) {
        debug_assert_eq!(b.plus.len(), self.width);
        self.masks.push(b.hmask);
        self.heads.extend_from_slice(&b.plus);
        self.tails.extend_from_slice(&b.minus);
    }

    /// Drops every rule whose head the new head divides; such a rule reduces
    /// nothing the new one cannot. Retired rules are tombstoned with an
    /// all-ones mask (rewriting by one would still be sound, merely wasted)
    /// and compacted away once they outnumber the live ones.
    fn retain_not_divisible_by(&mut self, r: &Bin) {
        for i in 0..self.len() {
            if self.masks[i] != u128::MAX
                && r.hmask & !self.masks[i] == 0
                && mono_divides(&r.plus, self.head(i))
            {
                self.masks[i] = u128::MAX;
                self.dead += 1;
            }
        }
        if self.dead * 2 > self.len() {
            self.compact();
        }
    }

    fn compact(&mut self) {
        let live: Vec<usize> = (0..self.len()).filter(|&i| self.masks[i] != u128::MAX).collect();
        let mut masks = Vec::with_capacity(live.len());
        let mut heads = Vec::with_capacity(live.len() * self.width);
        let mut tails = Vec::with_capacity(live.len() * self.width);
        for &i in &live {
            masks.push(self.masks[i]);
            heads.extend_from_slice(self.head(i));
            tails.extend_from_slice(self.tail(i));
        }
        self.masks = masks;
        self.heads = heads;
        self.tails = tails;
        self.dead = 0;
    }

    fn find(&self, m: &[u32], mmask: u128) -> Option<usize> {
        let w = self.width;
        (0..self.len()).find(|&i| {
            self.masks[i] & !mmask == 0
                && self.heads[i * w..(i + 1) * w].iter().zip(m).all(|(h, x)| h <= x)
        })
    }

    /// `m := (m / head_i) · tail_i`, in place; assumes divisibility.
    fn rewrite(&self, i: usize, m: &mut [u32]) {
        for ((x, &h), &t) in m.iter_mut().zip(self.head(i)).zip(self.tail(i)) {
            *x = (*x - h).checked_add(t).expect("exponent overflow in rewrite");
        }
    }
}

/// Rewrites `m` to its normal form under the rules. Each rewrite strictly
/// decreases `m` in the term order, so this terminates.
fn mono_normal_form(mut m: Mono, rules: &ReducerSet) -> Mono {
    let mut mask = support_mask(&m);
    while let Some(i) = rules.find(&m, mask) {
        rules.rewrite(i, &mut m);
        mask = support_mask(&m);
    }
    m
}

/// Full reduction of a binomial: the leading side is rewritten until no head
/// divides it (re-orienting whenever the sides cross), then the trailing side
/// is brought to normal form. Returns `None` when the binomial reduces to
/// zero.
fn reduce(bin: Bin, rules: &ReducerSet, cmp: &Cmp) -> Option<Bin> {
    let mut plus = bin.plus;
    let mut minus = bin.minus;
    loop {
        if plus == minus {
            return None;
        }
        if cmp.cmp(&plus, &minus) == Ordering::Less {
            std::mem::swap(&mut plus, &mut minus);
        }
        let mask = support_mask(&plus);
        let Some(i) = rules.find(&plus, mask) else {
            break;
        };
        rules.rewrite(i, &mut plus);
    }
    minus = mono_normal_form(minus, rules);
    if plus == minus {
        return None;
    }
    debug_assert_eq!(cmp.cmp(&plus, &minus), Ordering::Greater);
    Some(Bin::new(plus, minus))
}

fn spair(f: &Bin, g: &Bin, cmp: &Cmp) -> Option<Bin> {
    let l = mono_lcm(&f.plus, &g.plus);
    let a = mono_mul(&mono_div(&l, &f.plus), &f.minus);
    let b = mono_mul(&mono_div(&l, &g.plus), &g.minus);
    Bin::oriented(a, b, cmp)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// The pending S-pair queue with the Gebauer–Möller criteria applied on every
/// basis extension: the product criterion, elimination of new pairs whose lcm
/// is strictly divided by a sibling lcm, one representative per equal lcm, and
/// the chain criterion against the queued old pairs.
struct PairQueue {
    queue: BTreeMap<(u64, usize, usize), (Mono, u128)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue { queue: BTreeMap::new() }
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let ((_, i, j), _) = self.queue.pop_first()?;
        Some((i, j))
    }

    /// Queues the pairs of the new element `t` against the live part of the
    /// basis, after the Gebauer–Möller filters.
    fn extend(&mut self, basis: &[Bin], live: &[usize], t: usize) {
        let ht = &basis[t].plus;
        let ht_mask = basis[t].hmask;
        let ht_deg = mono_deg(ht);

        // one record per new pair, sorted so equal lcms are adjacent and
        // degrees ascend: (degree, lcm, mask, partner, coprime heads)
        let mut cands: Vec<(u64, Mono, u128, usize, bool)> = live
            .iter()
            .filter(|&&i| i != t)
            .map(|&i| {
                let l = mono_lcm(&basis[i].plus, ht);
                let deg = mono_deg(&l);
                let mask = support_mask(&l);
                (deg, l, mask, i, coprime(&basis[i].plus, ht))
            })
            .collect();
        cands.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

        // one representative per lcm value; a class containing a coprime pair
        // is dropped entirely later
        let mut reps: Vec<(u64, Mono, u128, usize, bool)> = Vec::new();
        for c in cands {
            match reps.last_mut() {
                Some(last) if last.1 == c.1 => {
                    last.3 = last.3.min(c.3);
                    last.4 |= c.4;
                }
                _ => reps.push(c),
            }
        }

        // drop representatives strictly divided by an earlier kept lcm; the
        // divider set is transitively closed, so kept entries suffice
        let mut kept: Vec<(u64, Mono, u128, usize, bool)> = Vec::new();
        'cand: for cand in reps {
            for k in &kept {
                if k.0 < cand.0 && k.2 & !cand.2 == 0 && mono_divides(&k.1, &cand.1) {
                    continue 'cand;
                }
            }
            kept.push(cand);
        }

        // chain criterion against the queued old pairs
        self.queue.retain(|&(deg, i, j), (l, lmask)| {
            !(deg >= ht_deg
                && ht_mask & !*lmask == 0
                && mono_divides(ht, l)
                && mono_lcm(&basis[i].plus, ht) != *l
                && mono_lcm(&basis[j].plus, ht) != *l)
        });

        for (deg, l, lmask, rep, cop) in kept {
            if cop {
                continue;
            }
            self.queue.insert((deg, rep, t), (l, lmask));
        }
    }
}

/// Buchberger's algorithm restricted to binomials, with the normal selection
/// strategy (lowest lcm degree first, ties by pair index) and the
/// Gebauer–Möller criteria.
///
/// Reductions run against the head-minimal subset of the basis: an element
/// whose head another head divides reduces nothing the divider cannot, so it
/// is dropped from the scan while staying in the pair bookkeeping.
fn buchberger(generators: Vec<Bin>, cmp: &Cmp, budget: &mut Budget) -> Result<Vec<Bin>> {
    let Some(width) = generators.first().map(|g| g.plus.len()) else {
        return Ok(Vec::new());
    };
    let mut basis: Vec<Bin> = Vec::new();
    let mut live: Vec<usize> = Vec::new();
    let mut reducers = ReducerSet::new(width);
    let mut pairs = PairQueue::new();

    fn add(
        basis: &mut Vec<Bin>,
        live: &mut Vec<usize>,
        reducers: &mut ReducerSet,
        pairs: &mut PairQueue,
        r: Bin,
    ) {
        basis.push(r.clone());
        let t = basis.len() - 1;
        pairs.extend(basis, live, t);
        live.retain(|&k| {
            !(r.hmask & !basis[k].hmask == 0 && mono_divides(&r.plus, &basis[k].plus))
        });
        live.push(t);
        reducers.retain_not_divisible_by(&r);
        reducers.push(&r);
    }

    for g in generators {
        if let Some(r) = reduce(g, &reducers, cmp) {
            add(&mut basis, &mut live, &mut reducers, &mut pairs, r);
        }
    }
    while let Some((i, j)) = pairs.pop() {
        budget.spend()?;
        let Some(s) = spair(&basis[i], &basis[j], cmp) else {
            continue;
        };
        if let Some(r) = reduce(s, &reducers, cmp) {
            add(&mut basis, &mut live, &mut reducers, &mut pairs, r);
        }
    }
    Ok(basis)
}

/// Interreduction: drop elements whose head is divisible by another head,
/// then bring every trailing side to normal form. For a Gröbner basis input
/// this produces the unique reduced basis.
fn interreduce(mut basis: Vec<Bin>, cmp: &Cmp) -> Vec<Bin> {
    basis.sort_by(|a, b| cmp.cmp(&a.plus, &b.plus));
    let mut kept: Vec<Bin> = Vec::new();
    for g in basis {
        if kept.iter().any(|h| mono_divides(&h.plus, &g.plus)) {
            continue;
        }
        kept.push(g);
    }
    let Some(width) = kept.first().map(|g| g.plus.len()) else {
        return kept;
    };
    let rules = ReducerSet::from_bins(width, &kept);
    for g in &mut kept {
        g.minus = mono_normal_form(std::mem::take(&mut g.minus), &rules);
        debug_assert_eq!(cmp.cmp(&g.plus, &g.minus), Ordering::Greater);
    }
    kept.sort_by(|a, b| a.plus.cmp(&b.plus).then_with(|| a.minus.cmp(&b.minus)));
    kept
}

// ---------------------------------------------------------------------------
// configuration-level operations

fn y_cmp(order: &TermOrder) -> Cmp {
    Cmp::Priority(order.to_priority())
}

fn ybin_to_bin(b: &YBinomial, m: usize) -> Bin {
    Bin::new(counts(&b.plus, m), counts(&b.minus, m))
}

fn bin_to_ybin(b: &Bin) -> YBinomial {
    YBinomial { plus: uncounts(&b.plus), minus: uncounts(&b.minus) }
}

fn induced_order(config: &MonomialSet, base: &TermOrder) -> Result<TermOrder> {
    TermOrder::induced_sharp(base.base().clone(), config)
}

/// The reduced Gröbner basis of the toric ideal of `config` under the order
/// induced by `base` on the `y`-variables.
///
/// Computed by Buchberger over the binomials `x^{u_i} − y_i` in the combined
/// ring with an elimination block order (every x-monomial beats every
/// y-monomial), then intersected with the `y`-subring and interreduced.
pub fn toric_gb(config: &MonomialSet, base: &TermOrder, budget: &mut Budget) -> Result<GroebnerBasis> {
    if config.is_empty() {
        return Err(Error::InvalidInput("empty configuration".into()));
    }
    let n = config.dim();
    let m = config.len();
    let order = induced_order(config, base)?;

    if base.base().dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: base.base().dim() });
    }
    let cmp = Cmp::Elimination { xdim: n, y_priority: order.to_priority() };

    let generators: Vec<Bin> = (0..m)
        .filter_map(|i| {
            let mut xm = vec![0u32; n + m];
            xm[..n].copy_from_slice(config.member(i).entries());
            let mut ym = vec![0u32; n + m];
            ym[n + i] = 1;
            Bin::oriented(xm, ym, &cmp)
        })
        .collect();

    let basis = buchberger(generators, &cmp, budget)?;
    let basis = interreduce(basis, &cmp);

    let ycmp = y_cmp(&order);
    let mut elements: Vec<YBinomial> = basis
        .into_iter()
        .filter(|b| b.plus[..n].iter().all(|&e| e == 0) && b.minus[..n].iter().all(|&e| e == 0))
        .map(|b| {
            let bin = Bin::new(b.plus[n..].to_vec(), b.minus[n..].to_vec());
            debug_assert_eq!(ycmp.cmp(&bin.plus, &bin.minus), Ordering::Greater);
            bin_to_ybin(&bin)
        })
        .collect();
    elements.sort();

    Ok(GroebnerBasis { config: config.clone(), order, elements, reduced: true })
}

/// Remainder of `b` under division by `g`; `None` means `b` lies in the ideal
/// generated by `g`.
pub fn normal_form(b: &YBinomial, g: &GroebnerBasis) -> Result<Option<YBinomial>> {
    let m = g.config.len();
    for &i in b.plus.iter().chain(b.minus.iter()) {
        if i >= m {
            return Err(Error::IndexOutOfRange { index: i, len: m });
        }
    }
    let cmp = y_cmp(&g.order);
    let bins: Vec<Bin> = g.elements.iter().map(|e| ybin_to_bin(e, m)).collect();
    let rules = ReducerSet::from_bins(m, &bins);
    Ok(reduce(ybin_to_bin(b, m), &rules, &cmp).map(|r| bin_to_ybin(&r)))
}

/// Whether the binomials `q` generate the full toric ideal of `config`:
/// a Gröbner basis is computed from `q` alone and every element of the
/// reduced basis of the toric ideal must reduce to zero against it.
pub fn generates(
    q: &[YBinomial],
    config: &MonomialSet,
    base: &TermOrder,
    budget: &mut Budget,
) -> Result<bool> {
    for b in q {
        if !kernel_test(b, config)? {
            return Err(Error::InvalidInput(
                "candidate generator is not in the toric ideal".into(),
            ));
        }
    }
    let g = toric_gb(config, base, budget)?;
    if q.is_empty() {
        return Ok(g.elements.is_empty());
    }
    let m = config.len();
    let cmp = y_cmp(&g.order);
    let gq = buchberger(q.iter().map(|b| ybin_to_bin(b, m)).collect(), &cmp, budget)?;
    let rules = ReducerSet::from_bins(m, &gq);
    Ok(g
        .elements
        .iter()
        .all(|e| reduce(ybin_to_bin(e, m), &rules, &cmp).is_none()))
}

/// Checks that `candidate` is a Gröbner basis of the toric ideal of `config`:
/// every element passes the kernel test, every S-pair reduces to zero against
/// the candidate, and the independently computed reduced basis reduces to
/// zero against it.
pub fn verify_gb(
    candidate: &[YBinomial],
    config: &MonomialSet,
    base: &TermOrder,
    budget: &mut Budget,
) -> Result<bool> {
    for b in candidate {
        if !kernel_test(b, config)? {
            return Ok(false);
        }
    }
    let m = config.len();
    let order = induced_order(config, base)?;
    let cmp = y_cmp(&order);
    let bins: Vec<Bin> = candidate.iter().map(|b| ybin_to_bin(b, m)).collect();
    let rules = ReducerSet::from_bins(m, &bins);
    for i in 0..bins.len() {
        for j in i + 1..bins.len() {
            budget.spend()?;
            if coprime(&bins[i].plus, &bins[j].plus) {
                continue;
            }
            if let Some(s) = spair(&bins[i], &bins[j], &cmp) {
                if reduce(s, &rules, &cmp).is_some() {
                    return Ok(false);
                }
            }
        }
    }
    let g = toric_gb(config, base, budget)?;
    if g.elements.is_empty() {
        return Ok(true);
    }
    if bins.is_empty() {
        return Ok(false);
    }
    Ok(g
        .elements
        .iter()
        .all(|e| reduce(ybin_to_bin(e, m), &rules, &cmp).is_none()))
}

/// Restriction of a reduced Gröbner basis to a combinatorial pure subring:
/// the elements supported on the `y`-variables of monomials living in the
/// variables `keep`, reindexed against the subconfiguration.
pub fn contract_gb(g: &GroebnerBasis, keep: &[usize]) -> Result<GroebnerBasis> {
    if keep.is_empty() {
        return Err(Error::InvalidInput("variable subset must be nonempty".into()));
    }
    let dim = g.config.dim();
    let mut in_t = vec![false; dim];
    for &v in keep {
        if v >= dim {
            return Err(Error::IndexOutOfRange { index: v, len: dim });
        }
        in_t[v] = true;
    }
    let sub_members: Vec<ExponentVector> = g
        .config
        .iter()
        .filter(|u| u.support().iter().all(|&i| in_t[i]))
        .cloned()
        .collect();
    if sub_members.is_empty() {
        return Err(Error::EmptySubconfiguration);
    }
    let sub_config = MonomialSet::new(dim, sub_members)?;
    let order = induced_order(&sub_config, &g.order)?;

    let reindex = |side: &[usize]| -> Option<Vec<usize>> {
        side.iter()
            .map(|&i| sub_config.index_of(g.config.member(i)))
            .collect()
    };
    let mut elements = Vec::new();
    for b in &g.elements {
        if let (Some(plus), Some(minus)) = (reindex(&b.plus), reindex(&b.minus)) {
            elements.push(YBinomial { plus, minus });
        }
    }
    elements.sort();
    Ok(GroebnerBasis { config: sub_config, order, elements, reduced: g.reduced })
}

/// Output of the split-and-lift construction: the swap binomials `G₀`, the
/// lifted binomials `G₁`, and their union packaged over the expanded
/// configuration. The union is a Gröbner basis but generally not reduced.
#[derive(Clone, Debug)]
pub struct SplitGb {
    pub g0: Vec<YBinomial>,
    pub g1: Vec<YBinomial>,
    pub basis: GroebnerBasis,
}

/// Lex order on the expanded ring that visits blocks in the priority order of
/// `base` and copies in ascending order within each block.
pub fn expanded_base_order(base: &TermOrder, shape: &ExpansionShape) -> TermOrder {
    let mut perm = Vec::with_capacity(shape.total_dim());
    for &i in &base.base().to_priority() {
        for j in 0..shape.blocks()[i] as usize {
            perm.push(shape.flat(i, j));
        }
    }
    TermOrder::Lex(perm)
}

/// Multiset choices of size `take` from `pool`, as sorted index vectors.
fn multiset_choices(pool: &[usize], take: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &[usize], start: usize, take: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if take == 0 {
            out.push(cur.clone());
            return;
        }
        for p in start..pool.len() {
            cur.push(pool[p]);
            rec(pool, p, take - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, 0, take, &mut Vec::new(), &mut out);
    out
}

/// The Gröbner basis of the expanded toric ideal for a single split
/// `α = 1 + ε_i`, as the union `G₀ ∪ G₁`:
///
/// * `G₀` holds the nonzero binomials `y_{u'}y_{v'} − y_{(u'/x_{i1})x_{i2}} y_{(v'/x_{i2})x_{i1}}`
///   over pairs of expanded monomials with `x_{i1} | u'` and `x_{i2} | v'`;
///   the swapped monomials have the same block sums, so they are again
///   members of the expanded configuration.
/// * `G₁` holds every lift of an element of `g` whose two sides multiply to
///   the same monomial of the expanded ring.
///
/// The input must be a Gröbner basis of the toric ideal of `config`; that
/// precondition is checked mechanically.
pub fn expand_gb_single_split(
    config: &MonomialSet,
    g: &GroebnerBasis,
    i: usize,
    budget: &mut Budget,
) -> Result<SplitGb> {
    if g.config != *config {
        return Err(Error::InvalidInput("basis does not belong to the configuration".into()));
    }
    if i >= config.dim() {
        return Err(Error::IndexOutOfRange { index: i, len: config.dim() });
    }
    if !verify_gb(&g.elements, config, &g.order, budget)? {
        return Err(Error::InvalidInput("input is not a Gröbner basis of the toric ideal".into()));
    }

    let shape = ExpansionShape::identity(config.dim()).plus_unit(i)?;
    let expanded = expand_set(config, &shape)?;
    let exp_set = expanded.set();
    let base = expanded_base_order(&g.order, &shape);
    let order = induced_order(exp_set, &base)?;

    let q1 = shape.flat(i, 0);
    let q2 = shape.flat(i, 1);

    let mut g0: BTreeSet<YBinomial> = BTreeSet::new();
    let with_q1: Vec<usize> = (0..exp_set.len()).filter(|&k| exp_set.member(k).entry(q1) > 0).collect();
    let with_q2: Vec<usize> = (0..exp_set.len()).filter(|&k| exp_set.member(k).entry(q2) > 0).collect();
    for &iu in &with_q1 {
        for &iv in &with_q2 {
            let u = exp_set.member(iu);
            let v = exp_set.member(iv);
            let w1 = u.try_swap(q1, q2).expect("x_{i1} divides u'");
            let w2 = v.try_swap(q2, q1).expect("x_{i2} divides v'");
            let iw1 = exp_set.index_of(&w1).expect("swap stays in the expansion");
            let iw2 = exp_set.index_of(&w2).expect("swap stays in the expansion");
            if let Some(b) =
                YBinomial::normalized(vec![iu, iv], vec![iw1, iw2], exp_set, &order)?
            {
                g0.insert(b);
            }
        }
    }

    // lifts of the expanded configuration grouped by source member
    let mut lifts: Vec<Vec<usize>> = vec![Vec::new(); config.len()];
    for k in 0..exp_set.len() {
        lifts[expanded.source_index(k)].push(k);
    }
    let side_lifts = |side: &[usize]| -> Vec<(Vec<usize>, Vec<u64>)> {
        // enumerate multiset lifts of the side, together with exponent sums
        let mut groups: Vec<(usize, usize)> = Vec::new(); // (source index, multiplicity)
        let mut it = side.iter().peekable();
        while let Some(&s) = it.next() {
            let mut mult = 1;
            while it.peek() == Some(&&s) {
                it.next();
                mult += 1;
            }
            groups.push((s, mult));
        }
        let mut acc: Vec<(Vec<usize>, Vec<u64>)> = vec![(Vec::new(), vec![0; exp_set.dim()])];
        for (src, mult) in groups {
            let choices = multiset_choices(&lifts[src], mult);
            let mut next = Vec::with_capacity(acc.len() * choices.len());
            for (chosen, sum) in &acc {
                for choice in &choices {
                    let mut c = chosen.clone();
                    c.extend_from_slice(choice);
                    let mut s = sum.clone();
                    for &k in choice {
                        for (t, &e) in s.iter_mut().zip(exp_set.member(k).entries()) {
                            *t += u64::from(e);
                        }
                    }
                    next.push((c, s));
                }
            }
            acc = next;
        }
        acc
    };

    let mut g1: BTreeSet<YBinomial> = BTreeSet::new();
    for b in &g.elements {
        let plus_lifts = side_lifts(&b.plus);
        let minus_lifts = side_lifts(&b.minus);
        for (pl, psum) in &plus_lifts {
            for (ml, msum) in &minus_lifts {
                if psum != msum {
                    continue;
                }
                if let Some(lifted) =
                    YBinomial::normalized(pl.clone(), ml.clone(), exp_set, &order)?
                {
                    g1.insert(lifted);
                }
            }
        }
    }

    let g0: Vec<YBinomial> = g0.into_iter().collect();
    let g1: Vec<YBinomial> = g1.into_iter().collect();
    let mut elements: Vec<YBinomial> = g0.iter().chain(g1.iter()).cloned().collect();
    elements.sort();
    elements.dedup();
    Ok(SplitGb {
        g0,
        g1,
        basis: GroebnerBasis { config: exp_set.clone(), order, elements, reduced: false },
    })
}

/// Gröbner basis of the expanded toric ideal for a general shape, by applying
/// the single split once per unit increment in canonical variable order and
/// relabeling between the steps. The result is verified reduced-equal to the
/// directly computed basis of the expanded configuration; a mismatch is a bug
/// escalation, not a recoverable state.
pub fn expand_gb(
    config: &MonomialSet,
    g: &GroebnerBasis,
    shape: &ExpansionShape,
    budget: &mut Budget,
) -> Result<SplitGb> {
    if shape.source_dim() != config.dim() {
        return Err(Error::DimensionMismatch { expected: config.dim(), found: shape.source_dim() });
    }
    if shape.is_identity() {
        return Ok(SplitGb { g0: Vec::new(), g1: Vec::new(), basis: g.clone() });
    }

    let mut done = ExpansionShape::identity(config.dim());
    let mut cur_config = config.clone();
    let mut cur_gb = g.clone();
    let mut last: Option<SplitGb> = None;

    for block in 0..shape.source_dim() {
        for _ in 1..=shape.blocks()[block] - done.blocks()[block] {
            // the split lands on the last copy of the block; the relabeling
            // of the iterated expansion is the identity on flat positions
            let sigma = relabel_iterated(&done, block)?;
            debug_assert!(sigma.is_identity());
            let split_var = done.flat(block, done.blocks()[block] as usize - 1);
            let step = expand_gb_single_split(&cur_config, &cur_gb, split_var, budget)?;
            done = done.plus_unit(block)?;
            cur_config = step.basis.config.clone();
            // reduced intermediate keeps later lift enumerations small; a
            // reduced basis is still a basis, which is all the next split needs
            cur_gb = reduce_basis(&step.basis);
            last = Some(step);
        }
    }
    debug_assert_eq!(done, *shape);

    let result = last.expect("non-identity shape performs at least one split");
    let direct = toric_gb(&result.basis.config, &result.basis.order, budget)?;
    let reduced = reduce_basis(&result.basis);
    if reduced.elements != direct.elements {
        return Err(Error::PropertyViolation(
            "split-and-lift basis does not reduce to the directly computed basis".into(),
        ));
    }
    Ok(result)
}

/// Mechanical check that flattening the toric ideal of an expansion along the
/// block-sum map lands exactly on the toric ideal of the source: every basis
/// element of the expanded ideal flattens to a kernel element, and the
/// nonzero flattenings generate.
pub fn verify_pi0(
    config: &MonomialSet,
    shape: &ExpansionShape,
    base: &TermOrder,
    budget: &mut Budget,
) -> Result<bool> {
    let expanded = expand_set(config, shape)?;
    let exp_base = expanded_base_order(base, shape);
    let g = toric_gb(expanded.set(), &exp_base, budget)?;
    let order = induced_order(config, base)?;

    let mut flattened: Vec<YBinomial> = Vec::new();
    for b in g.elements() {
        let map = |side: &[usize]| -> Vec<usize> {
            side.iter().map(|&i| expanded.source_index(i)).collect()
        };
        if let Some(f) = YBinomial::normalized(map(&b.plus), map(&b.minus), config, &order)? {
            if !kernel_test(&f, config)? {
                return Ok(false);
            }
            flattened.push(f);
        }
    }
    flattened.sort();
    flattened.dedup();
    generates(&flattened, config, base, budget)
}

/// Interreduces a Gröbner basis in place of its own order.
pub fn reduce_basis(g: &GroebnerBasis) -> GroebnerBasis {
    let m = g.config.len();
    let cmp = y_cmp(&g.order);
    let bins: Vec<Bin> = g.elements.iter().map(|b| ybin_to_bin(b, m)).collect();
    let mut elements: Vec<YBinomial> =
        interreduce(bins, &cmp).iter().map(bin_to_ybin).collect();
    elements.sort();
    GroebnerBasis { config: g.config.clone(), order: g.order.clone(), elements, reduced: true }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(entries)
    }

    fn set(dim: usize, rows: &[&[u32]]) -> MonomialSet {
        MonomialSet::new(dim, rows.iter().map(|r| ev(r)).collect()).unwrap()
    }

    fn budget() -> Budget {
        Budget::new(DEFAULT_BUDGET)
    }

    /// The five monomials of the worked example over K[x1..x4].
    fn paper_config() -> MonomialSet {
        set(
            4,
            &[&[2, 1, 0, 0], &[1, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 2, 0], &[0, 1, 0, 2]],
        )
    }

    fn ybin(config: &MonomialSet, order: &TermOrder, plus: &[&[u32]], minus: &[&[u32]]) -> YBinomial {
        let to_idx = |rows: &[&[u32]]| -> Vec<usize> {
            rows.iter().map(|r| config.index_of(&ev(r)).expect("member")).collect()
        };
        YBinomial::normalized(to_idx(plus), to_idx(minus), config, order)
            .unwrap()
            .expect("nonzero")
    }

    #[test]
    fn toric_gb_paper_example() {
        let a = paper_config();
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        let want = ybin(
            &a,
            g.order(),
            &[&[2, 1, 0, 0], &[0, 1, 0, 2]],
            &[&[1, 1, 0, 1], &[1, 1, 0, 1]],
        );
        assert_eq!(g.elements(), &[want]);
    }

    #[test]
    fn toric_gb_independent_variables() {
        let a = set(2, &[&[1, 0], &[0, 1]]);
        let g = toric_gb(&a, &TermOrder::lex(2), &mut budget()).unwrap();
        assert!(g.elements().is_empty());
    }

    #[test]
    fn toric_gb_four_bases_quadric() {
        // expanded singleton base set: I = (y_{u1} y_{u4} − y_{u2} y_{u3})
        let a = set(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        let want = ybin(
            &a,
            g.order(),
            &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
            &[&[1, 0, 0, 1], &[0, 1, 1, 0]],
        );
        assert_eq!(g.elements(), &[want]);
    }

    #[test]
    fn kernel_test_examples() {
        let a = set(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let order = induced_order(&a, &TermOrder::lex(4)).unwrap();
        let quad = ybin(
            &a,
            &order,
            &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
            &[&[1, 0, 0, 1], &[0, 1, 1, 0]],
        );
        assert!(kernel_test(&quad, &a).unwrap());

        let linear = YBinomial { plus: vec![0], minus: vec![1] };
        assert!(!kernel_test(&linear, &a).unwrap());

        let paper = paper_config();
        let porder = induced_order(&paper, &TermOrder::lex(4)).unwrap();
        let g = ybin(
            &paper,
            &porder,
            &[&[2, 1, 0, 0], &[0, 1, 0, 2]],
            &[&[1, 1, 0, 1], &[1, 1, 0, 1]],
        );
        assert!(kernel_test(&g, &paper).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let a = paper_config();
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        // any basis element reduces to zero
        for e in g.elements() {
            assert_eq!(normal_form(e, &g).unwrap(), None);
        }
        // a product lift of the single quadric reduces to zero
        let sq = {
            let e = &g.elements()[0];
            let double = |side: &[usize]| {
                let mut d = side.to_vec();
                d.extend_from_slice(side);
                d
            };
            YBinomial::normalized(double(e.plus()), double(e.minus()), &a, g.order())
                .unwrap()
                .unwrap()
        };
        assert_eq!(normal_form(&sq, &g).unwrap(), None);

        // nothing reduces against an empty basis
        let free = set(2, &[&[1, 0], &[0, 1]]);
        let gfree = toric_gb(&free, &TermOrder::lex(2), &mut budget()).unwrap();
        let b = YBinomial { plus: vec![1, 1], minus: vec![0, 0] };
        assert_eq!(normal_form(&b, &gfree).unwrap(), Some(b.clone()));
    }

    #[test]
    fn generates_examples() {
        let a = set(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let order = induced_order(&a, &TermOrder::lex(4)).unwrap();
        let quad = ybin(
            &a,
            &order,
            &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
            &[&[1, 0, 0, 1], &[0, 1, 1, 0]],
        );
        assert!(generates(&[quad], &a, &TermOrder::lex(4), &mut budget()).unwrap());
        assert!(!generates(&[], &a, &TermOrder::lex(4), &mut budget()).unwrap());

        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        assert!(generates(g.elements(), &a, &TermOrder::lex(4), &mut budget()).unwrap());
    }

    #[test]
    fn verify_gb_examples() {
        let a = paper_config();
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        assert!(verify_gb(g.elements(), &a, &TermOrder::lex(4), &mut budget()).unwrap());
        // dropping an element of a basis breaks containment
        assert!(!verify_gb(&[], &a, &TermOrder::lex(4), &mut budget()).unwrap());
    }

    #[test]
    fn contract_gb_keeps_whole_basis_on_full_set() {
        let a = paper_config();
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        let c = contract_gb(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(c.elements(), g.elements());
    }

    #[test]
    fn contract_gb_empty_subconfiguration_errors() {
        let a = set(2, &[&[1, 1]]);
        let g = toric_gb(&a, &TermOrder::lex(2), &mut budget()).unwrap();
        assert_eq!(contract_gb(&g, &[0]).unwrap_err(), Error::EmptySubconfiguration);
    }

    #[test]
    fn expand_gb_single_split_trivial_cases() {
        // A = {x1}, split x1: two independent variables, no relations
        let a = set(1, &[&[1]]);
        let g = toric_gb(&a, &TermOrder::lex(1), &mut budget()).unwrap();
        let out = expand_gb_single_split(&a, &g, 0, &mut budget()).unwrap();
        assert!(out.g0.is_empty() && out.g1.is_empty());

        // A = {x1x2}, split x1: the only candidate swap cancels to zero
        let a = set(2, &[&[1, 1]]);
        let g = toric_gb(&a, &TermOrder::lex(2), &mut budget()).unwrap();
        let out = expand_gb_single_split(&a, &g, 0, &mut budget()).unwrap();
        assert!(out.g0.is_empty() && out.g1.is_empty());
        let direct = toric_gb(out.basis.config(), out.basis.order(), &mut budget()).unwrap();
        assert!(direct.elements().is_empty());
    }

    #[test]
    fn expand_gb_paper_example() {
        let a = paper_config();
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        let shape = ExpansionShape::new(vec![1, 1, 1, 2]).unwrap();
        let out = expand_gb(&a, &g, &shape, &mut budget()).unwrap();

        let exp = out.basis.config();
        let order = out.basis.order();
        // x41 is flat index 3, x42 is flat index 4
        let x1x2x41 = &[1, 1, 0, 1, 0];
        let x1x2x42 = &[1, 1, 0, 0, 1];
        let x2x41sq = &[0, 1, 0, 2, 0];
        let x2x41x42 = &[0, 1, 0, 1, 1];
        let x2x42sq = &[0, 1, 0, 0, 2];
        let x1sqx2 = &[2, 1, 0, 0, 0];

        let want_g0 = vec![
            ybin(exp, order, &[x1x2x41, x2x41x42], &[x1x2x42, x2x41sq]),
            ybin(exp, order, &[x2x41sq, x2x42sq], &[x2x41x42, x2x41x42]),
            ybin(exp, order, &[x1x2x41, x2x42sq], &[x1x2x42, x2x41x42]),
        ];
        let want_g1 = vec![
            ybin(exp, order, &[x1sqx2, x2x41sq], &[x1x2x41, x1x2x41]),
            ybin(exp, order, &[x1sqx2, x2x42sq], &[x1x2x42, x1x2x42]),
            ybin(exp, order, &[x1sqx2, x2x41x42], &[x1x2x41, x1x2x42]),
        ];
        let sorted = |mut v: Vec<YBinomial>| {
            v.sort();
            v
        };
        assert_eq!(out.g0, sorted(want_g0));
        assert_eq!(out.g1, sorted(want_g1));
        assert!(verify_gb(out.basis.elements(), exp, &TermOrder::lex(5), &mut budget()).unwrap());
    }

    #[test]
    fn expand_gb_two_splits_reaches_four_bases() {
        let a = set(2, &[&[1, 1]]);
        let g = toric_gb(&a, &TermOrder::lex(2), &mut budget()).unwrap();
        let shape = ExpansionShape::new(vec![2, 2]).unwrap();
        let out = expand_gb(&a, &g, &shape, &mut budget()).unwrap();
        let reduced = reduce_basis(&out.basis);
        assert_eq!(reduced.elements().len(), 1);
        assert_eq!(reduced.elements()[0].degree(), 2);
    }

    #[test]
    fn contract_gb_inverts_expansion() {
        // contraction to the unexpanded variables recovers the original basis
        let a = paper_config();
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        let shape = ExpansionShape::new(vec![1, 1, 1, 2]).unwrap();
        let expanded = expand_set(&a, &shape).unwrap();
        let gexp = toric_gb(expanded.set(), &TermOrder::lex(5), &mut budget()).unwrap();
        // keep x1, x2, x3, x41 — flat indices 0..=3
        let c = contract_gb(&gexp, &[0, 1, 2, 3]).unwrap();

        // compare after relabeling flat coordinates back to 4 variables
        let back = |v: &ExponentVector| {
            ExponentVector::new(vec![v.entry(0), v.entry(1), v.entry(2), v.entry(3)])
        };
        let mut got: Vec<(Vec<ExponentVector>, Vec<ExponentVector>)> = c
            .elements_as_monomials()
            .into_iter()
            .map(|(p, m)| {
                (p.iter().map(&back).collect(), m.iter().map(&back).collect())
            })
            .collect();
        got.sort();
        let mut want = g.elements_as_monomials();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn reduced_gb_is_input_order_invariant() {
        let rows: Vec<&[u32]> =
            vec![&[2, 1, 0, 0], &[1, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 2, 0], &[0, 1, 0, 2]];
        let mut permuted = rows.clone();
        permuted.reverse();
        let a = set(4, &rows);
        let b = set(4, &permuted);
        let ga = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        let gb = toric_gb(&b, &TermOrder::lex(4), &mut budget()).unwrap();
        assert_eq!(ga.elements(), gb.elements());
    }

    #[test]
    fn pi0_flattening_generates() {
        let a = paper_config();
        let shape = ExpansionShape::new(vec![1, 1, 1, 2]).unwrap();
        assert!(verify_pi0(&a, &shape, &TermOrder::lex(4), &mut budget()).unwrap());

        let b = set(2, &[&[1, 1]]);
        let shape = ExpansionShape::new(vec![2, 2]).unwrap();
        assert!(verify_pi0(&b, &shape, &TermOrder::lex(2), &mut budget()).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let a = paper_config();
        let mut tiny = Budget::new(1);
        assert!(matches!(
            toric_gb(&a, &TermOrder::lex(4), &mut tiny),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn ybinomial_display() {
        let a = paper_config();
        let g = toric_gb(&a, &TermOrder::lex(4), &mut budget()).unwrap();
        assert_eq!(
            g.elements()[0].display(&a),
            "y[x1^2*x2]*y[x2*x4^2] - y[x1*x2*x4]^2"
        );
    }
}

// temporary instrumentation; removed before release
pub mod probe_stats {
    use std::sync::atomic::{AtomicU64, Ordering};
    pub static REWRITES: AtomicU64 = AtomicU64::new(0);
    pub static SCAN_VISITS: AtomicU64 = AtomicU64::new(0);
    pub static REDUCE_CALLS: AtomicU64 = AtomicU64::new(0);
    pub fn dump() {
        println!(
            "reduce calls {}, rewrites {}, scan visits {}",
            REDUCE_CALLS.load(Ordering::Relaxed),
            REWRITES.load(Ordering::Relaxed),
            SCAN_VISITS.load(Ordering::Relaxed)
        );
    }
}
