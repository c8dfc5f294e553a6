//! Exact integer and rational linear algebra backing the semigroup module:
//! echelon lattice bases over Z and rational nonnegative feasibility.

use num::rational::Ratio;
use num::{BigInt, One, Signed, Zero};

type Rat = Ratio<BigInt>;

/// Integer row-echelon basis of the lattice spanned by the input rows, with
/// positive pivots at strictly increasing columns.
pub(crate) struct LatticeBasis {
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

fn checked_combine(row: &mut [i128], other: &[i128], q: i128) {
    for (r, &o) in row.iter_mut().zip(other) {
        *r = r
            .checked_sub(q.checked_mul(o).expect("integer overflow in lattice reduction"))
            .expect("integer overflow in lattice reduction");
    }
}

impl LatticeBasis {
    pub(crate) fn new(input: &[Vec<i128>]) -> Self {
        let width = input.first().map_or(0, Vec::len);
        let mut work: Vec<Vec<i128>> = input
            .iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..width {
            loop {
                let mut best: Option<usize> = None;
                for (i, r) in work.iter().enumerate() {
                    if r[col] != 0
                        && best.map_or(true, |b| r[col].abs() < work[b][col].abs())
                    {
                        best = Some(i);
                    }
                }
                let Some(p) = best else { break };
                let pivot_row = work.swap_remove(p);
                let mut clean = true;
                for r in work.iter_mut() {
                    if r[col] != 0 {
                        let q = r[col].div_euclid(pivot_row[col]);
                        checked_combine(r, &pivot_row, q);
                        clean &= r[col] == 0;
                    }
                }
                work.push(pivot_row);
                if clean {
                    let mut row = work.pop().expect("pivot row present");
                    if row[col] < 0 {
                        for x in row.iter_mut() {
                            *x = -*x;
                        }
                    }
                    rows.push(row);
                    pivots.push(col);
                    work.retain(|r| r.iter().any(|&x| x != 0));
                    break;
                }
            }
        }
        LatticeBasis { rows, pivots }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether `u` is an integer combination of the basis rows, by forward
    /// substitution along the pivot columns.
    pub(crate) fn contains(&self, u: &[i64]) -> bool {
        let mut v: Vec<i128> = u.iter().map(|&x| i128::from(x)).collect();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if v[col] == 0 {
                continue;
            }
            if v[col] % row[col] != 0 {
                return false;
            }
            let q = v[col] / row[col];
            checked_combine(&mut v, row, q);
        }
        v.iter().all(|&x| x == 0)
    }
}

/// Whether `target` is a nonnegative rational combination of `gens`, by a
/// phase-one simplex with Bland's rule over exact rationals.
pub(crate) fn in_rational_cone(gens: &[Vec<i64>], target: &[i64]) -> bool {
    let n = target.len();
    let m = gens.len();
    if target.iter().all(|&t| t == 0) {
        return true;
    }
    if m == 0 {
        return false;
    }

    // rows: Σ_j λ_j gens[j][i] + a_i = target[i], rows sign-normalized so the
    // right-hand side is nonnegative; minimize Σ a_i
    let total = m + n;
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let mut rhs: Vec<Rat> = Vec::with_capacity(n);
    for i in 0..n {
        let sign: i64 = if target[i] < 0 { -1 } else { 1 };
        let mut row: Vec<Rat> = Vec::with_capacity(total);
        for j in 0..m {
            row.push(Rat::from(BigInt::from(sign * gens[j][i])));
        }
        for k in 0..n {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        tab.push(row);
        rhs.push(Rat::from(BigInt::from(sign * target[i])));
    }
    let mut basis: Vec<usize> = (m..total).collect();

    // objective row priced for the artificial basis
    let mut obj: Vec<Rat> = vec![Rat::zero(); total];
    let mut objval = Rat::zero();
    for j in 0..total {
        let mut s = Rat::zero();
        for i in 0..n {
            s += tab[i][j].clone();
        }
        let cost = if j >= m { Rat::one() } else { Rat::zero() };
        obj[j] = cost - s;
    }
    for r in &rhs {
        objval -= r.clone();
    }

    loop {
        // Bland: the lowest-index column with a negative reduced cost enters
        let Some(enter) = (0..total).find(|&j| obj[j].is_negative()) else {
            return objval.is_zero();
        };
        // ratio test; Bland tie-break on the leaving basis variable
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..n {
            if tab[i][enter].is_positive() {
                let ratio = rhs[i].clone() / tab[i][enter].clone();
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[i] < basis[leave.expect("leave set with best")])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(piv) = leave else {
            // unbounded phase-one objective cannot happen; treat as infeasible
            return false;
        };
        let scale = tab[piv][enter].clone();
        for x in tab[piv].iter_mut() {
            *x /= scale.clone();
        }
        rhs[piv] /= scale;
        for i in 0..n {
            if i != piv && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..total {
                    let d = f.clone() * tab[piv][j].clone();
                    tab[i][j] -= d;
                }
                let d = f * rhs[piv].clone();
                rhs[i] -= d;
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..total {
                let d = f.clone() * tab[piv][j].clone();
                obj[j] -= d;
            }
            let d = f * rhs[piv].clone();
            objval -= d;
        }
        basis[piv] = enter;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_mod_three() {
        let b = LatticeBasis::new(&[vec![3, 0], vec![2, 1], vec![0, 3]]);
        assert_eq!(b.rank(), 2);
        // the lattice is { (a, b) : a + b ≡ 0 mod 3 }
        assert!(b.contains(&[1, 2]));
        assert!(b.contains(&[3, 0]));
        assert!(b.contains(&[-1, 1]));
        assert!(!b.contains(&[1, 0]));
        assert!(!b.contains(&[0, 2]));
    }

    #[test]
    fn lattice_rank_examples() {
        assert_eq!(LatticeBasis::new(&[vec![1, 0, 0]]).rank(), 1);
        assert_eq!(LatticeBasis::new(&[vec![1, 1], vec![2, 2]]).rank(), 1);
        assert_eq!(LatticeBasis::new(&[vec![0, 0]]).rank(), 0);
    }

    #[test]
    fn cone_feasibility_examples() {
        let quadrant = vec![vec![1, 0], vec![0, 1]];
        assert!(in_rational_cone(&quadrant, &[1, 2]));
        assert!(!in_rational_cone(&quadrant, &[-1, 0]));

        let wedge = vec![vec![2, 1], vec![1, 2]];
        assert!(!in_rational_cone(&wedge, &[1, 0]));
        assert!(in_rational_cone(&wedge, &[1, 1]));
        assert!(in_rational_cone(&wedge, &[3, 3]));

        // half-integral combination
        assert!(in_rational_cone(&[vec![2, 0]], &[1, 0]));
        assert!(in_rational_cone(&[], &[0, 0]));
        assert!(!in_rational_cone(&[], &[1, 0]));
    }
}
