//! Dense two-phase primal simplex over exact rationals, specialized to the
//! covering programs used by the solvers:
//!
//! ```text
//! minimize    sum_j x_j
//! subject to  sum_{j : e in cols(j)} x_j >= rhs_e     for each row e
//!             x_j <= upper_j                          for bounded j
//!             x >= 0
//! ```
//!
//! Pivoting uses Dantzig's rule for speed and switches to Bland's rule for
//! cycling avoidance after a run of degenerate pivots, so every solve
//! terminates. Arithmetic runs on machine-word fractions with overflow
//! checks and falls back to arbitrary precision when a solve outgrows them;
//! either way every number is exact. Solutions and dual certificates are
//! re-verified before being returned; a failed check is a solver bug and
//! panics.

use num_traits::{Signed, Zero};

use crate::rational::{rat_frac, rat_one, rat_u64, rat_zero, Rat};

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub value: Rat,
    /// Primal values per variable.
    pub x: Vec<Rat>,
    /// Dual values per covering row; always feasible for the packing dual.
    pub y: Vec<Rat>,
    /// Dual values of the upper-bound rows, per variable (zero if unbounded).
    pub bound_duals: Vec<Rat>,
}

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Infeasible,
    Optimal(LpSolution),
}

/// Exact scalar the tableau can run on. Arithmetic returns `None` when the
/// representation would overflow; the driver then retries in full precision.
trait Scalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u64(v: u64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn sub_mul(&self, f: &Self, p: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn lt(&self, o: &Self) -> bool;
    fn to_rat(&self) -> Rat;
}

impl Scalar for Rat {
    fn zero() -> Self {
        rat_zero()
    }
    fn one() -> Self {
        rat_one()
    }
    fn from_u64(v: u64) -> Self {
        rat_u64(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn sub_mul(&self, f: &Self, p: &Self) -> Option<Self> {
        Some(self - f * p)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
    fn to_rat(&self) -> Rat {
        self.clone()
    }
}

/// Fraction of two machine words, kept reduced with the denominator
/// positive. Magnitudes are capped well below the i128 range so that
/// cross-multiplied comparisons and sums cannot overflow silently.
#[derive(Clone, Copy, Debug)]
struct Fix {
    n: i128,
    d: i128,
}

const FIX_MAG: i128 = 1 << 62;

impl Fix {
    fn make(n: i128, d: i128) -> Option<Fix> {
        debug_assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        if n == 0 {
            return Some(Fix { n: 0, d: 1 });
        }
        let g = gcd(n.unsigned_abs(), d.unsigned_abs()) as i128;
        n /= g;
        d /= g;
        if n.abs() > FIX_MAG || d > FIX_MAG {
            return None;
        }
        Some(Fix { n, d })
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Scalar for Fix {
    fn zero() -> Self {
        Fix { n: 0, d: 1 }
    }
    fn one() -> Self {
        Fix { n: 1, d: 1 }
    }
    fn from_u64(v: u64) -> Self {
        Fix { n: v as i128, d: 1 }
    }
    fn is_zero(&self) -> bool {
        self.n == 0
    }
    fn is_negative(&self) -> bool {
        self.n < 0
    }
    fn is_positive(&self) -> bool {
        self.n > 0
    }
    /// `self - f * p`, exact or `None` on overflow. Bounded magnitudes keep
    /// every intermediate product inside i128.
    fn sub_mul(&self, f: &Fix, p: &Fix) -> Option<Fix> {
        let num = self
            .n
            .checked_mul(f.d.checked_mul(p.d)?)?
            .checked_sub(f.n.checked_mul(p.n)?.checked_mul(self.d)?)?;
        let den = self.d.checked_mul(f.d)?.checked_mul(p.d)?;
        Fix::make(num, den)
    }
    fn mul(&self, o: &Fix) -> Option<Fix> {
        Fix::make(self.n.checked_mul(o.n)?, self.d.checked_mul(o.d)?)
    }
    fn div(&self, o: &Fix) -> Option<Fix> {
        if o.n == 0 {
            return None;
        }
        Fix::make(self.n.checked_mul(o.d)?, self.d.checked_mul(o.n)?)
    }
    fn lt(&self, o: &Fix) -> bool {
        // Cross products stay within i128 thanks to the magnitude cap.
        self.n * o.d < o.n * self.d
    }
    fn to_rat(&self) -> Rat {
        // The magnitude cap keeps both parts within i64.
        debug_assert!(self.n.abs() <= FIX_MAG && self.d <= FIX_MAG);
        rat_frac(self.n as i64, self.d as i64)
    }
}

/// Solves the covering LP. `columns[j]` lists the covering rows variable `j`
/// appears in; `rhs` holds positive requirements; `upper[j]` optionally caps
/// variable `j` (caps must be at least 1 — drop fixed-to-zero variables
/// before calling).
pub fn solve_covering_lp(columns: &[Vec<usize>], rhs: &[u64], upper: &[Option<u64>]) -> LpOutcome {
    assert_eq!(columns.len(), upper.len());
    assert!(rhs.iter().all(|&r| r > 0));
    assert!(upper.iter().all(|u| u.is_none_or(|u| u > 0)));
    if rhs.is_empty() {
        return LpOutcome::Optimal(LpSolution {
            value: rat_zero(),
            x: vec![rat_zero(); columns.len()],
            y: Vec::new(),
            bound_duals: vec![rat_zero(); columns.len()],
        });
    }
    let outcome = match solve_generic::<Fix>(columns, rhs, upper) {
        Some(outcome) => outcome,
        // Word-sized fractions overflowed; redo in full precision.
        None => solve_generic::<Rat>(columns, rhs, upper).expect("big rationals cannot overflow"),
    };
    if let LpOutcome::Optimal(sol) = &outcome {
        verify_certificates(columns, rhs, upper, sol);
    }
    outcome
}

fn solve_generic<T: Scalar>(
    columns: &[Vec<usize>],
    rhs: &[u64],
    upper: &[Option<u64>],
) -> Option<LpOutcome> {
    let nv = columns.len();
    let mc = rhs.len();
    let bounded: Vec<usize> = (0..nv).filter(|&j| upper[j].is_some()).collect();
    let s_base = nv;
    let t_base = nv + mc;
    let ncols = t_base + bounded.len();
    let nrows = mc + bounded.len();
    // Artificial variables are implicit: never stored as columns, only as
    // basis markers `ncols + row`.
    let art = |row: usize| ncols + row;

    let mut t: Vec<Vec<T>> = vec![vec![T::zero(); ncols + 1]; nrows];
    let mut basis: Vec<usize> = vec![0; nrows];
    for (j, col) in columns.iter().enumerate() {
        for &e in col {
            t[e][j] = T::one();
        }
    }
    for e in 0..mc {
        t[e][s_base + e] = neg(&T::one())?;
        t[e][ncols] = T::from_u64(rhs[e]);
        basis[e] = art(e);
    }
    for (bi, &j) in bounded.iter().enumerate() {
        let row = mc + bi;
        t[row][j] = T::one();
        t[row][t_base + bi] = T::one();
        t[row][ncols] = T::from_u64(upper[j].unwrap());
        basis[row] = t_base + bi;
    }

    let mut tab = Tableau {
        t,
        basis,
        ncols,
        art_base: ncols,
    };

    // Phase 1: minimize the artificial sum. Reduced costs start as the
    // negated column sums over the artificial rows.
    let mut obj = vec![T::zero(); ncols + 1];
    for e in 0..mc {
        for (cell, entry) in obj.iter_mut().zip(&tab.t[e]) {
            if !entry.is_zero() {
                *cell = cell.sub_mul(&T::one(), entry)?;
            }
        }
    }
    tab.minimize(&mut obj)?;
    if !obj[ncols].is_zero() {
        return Some(LpOutcome::Infeasible);
    }
    tab.purge_artificials()?;

    // Phase 2: minimize the true objective.
    let mut obj = vec![T::zero(); ncols + 1];
    for cell in obj.iter_mut().take(nv) {
        *cell = T::one();
    }
    for i in 0..tab.t.len() {
        if tab.basis[i] < nv {
            for (cell, entry) in obj.iter_mut().zip(&tab.t[i]) {
                if !entry.is_zero() {
                    *cell = cell.sub_mul(&T::one(), entry)?;
                }
            }
        }
    }
    tab.minimize(&mut obj)?;

    let mut x = vec![rat_zero(); nv];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < nv {
            x[b] = tab.t[i][tab.ncols].to_rat();
        }
    }
    let value: Rat = x.iter().sum();
    let y: Vec<Rat> = (0..mc).map(|e| obj[s_base + e].to_rat()).collect();
    let mut bound_duals = vec![rat_zero(); nv];
    for (bi, &j) in bounded.iter().enumerate() {
        bound_duals[j] = obj[t_base + bi].to_rat();
    }
    Some(LpOutcome::Optimal(LpSolution {
        value,
        x,
        y,
        bound_duals,
    }))
}

fn neg<T: Scalar>(v: &T) -> Option<T> {
    T::zero().sub_mul(&T::one(), v)
}

fn verify_certificates(
    columns: &[Vec<usize>],
    rhs: &[u64],
    upper: &[Option<u64>],
    sol: &LpSolution,
) {
    let LpSolution {
        value,
        x,
        y,
        bound_duals: w,
    } = sol;
    // Primal feasibility.
    let mut row_sums = vec![rat_zero(); rhs.len()];
    for (j, col) in columns.iter().enumerate() {
        assert!(!Signed::is_negative(&x[j]), "negative primal value");
        if let Some(u) = upper[j] {
            assert!(x[j] <= rat_u64(u), "upper bound violated");
        }
        for &e in col {
            row_sums[e] += &x[j];
        }
    }
    for (e, s) in row_sums.iter().enumerate() {
        assert!(*s >= rat_u64(rhs[e]), "covering row violated");
    }
    // Dual feasibility: sum_e y_e - w_j <= 1 per variable, y, w >= 0.
    for ye in y {
        assert!(!Signed::is_negative(ye), "negative dual");
    }
    for (j, col) in columns.iter().enumerate() {
        assert!(!Signed::is_negative(&w[j]), "negative bound dual");
        let lhs: Rat = col.iter().map(|&e| y[e].clone()).sum::<Rat>() - &w[j];
        assert!(lhs <= rat_one(), "dual constraint violated");
    }
    // Strong duality, exactly.
    let dual_value: Rat = y
        .iter()
        .zip(rhs)
        .map(|(ye, &r)| ye * rat_u64(r))
        .sum::<Rat>()
        - (0..columns.len())
            .filter_map(|j| upper[j].map(|u| &w[j] * rat_u64(u)))
            .sum::<Rat>();
    assert_eq!(&dual_value, value, "duality gap");
}

struct Tableau<T> {
    t: Vec<Vec<T>>,
    basis: Vec<usize>,
    ncols: usize,
    art_base: usize,
}

impl<T: Scalar> Tableau<T> {
    /// Runs the simplex loop for the objective row `obj` (reduced-cost form,
    /// negated value in the last cell), updating it alongside the tableau.
    /// Returns `None` on scalar overflow.
    fn minimize(&mut self, obj: &mut [T]) -> Option<()> {
        let mut bland = false;
        let mut degenerate_run = 0usize;
        loop {
            let Some(pc) = self.entering(obj, bland) else {
                return Some(());
            };
            let pr = self
                .leaving(pc)
                .expect("covering LP objective is bounded below");
            let degenerate = self.t[pr][self.ncols].is_zero();
            self.pivot(pr, pc, obj)?;
            if degenerate {
                degenerate_run += 1;
                if degenerate_run > self.t.len() + self.ncols {
                    bland = true;
                }
            } else {
                degenerate_run = 0;
            }
        }
    }

    fn entering(&self, obj: &[T], bland: bool) -> Option<usize> {
        if bland {
            (0..self.art_base).find(|&c| obj[c].is_negative())
        } else {
            let mut best: Option<usize> = None;
            for c in 0..self.art_base {
                if obj[c].is_negative() && best.is_none_or(|b| obj[c].lt(&obj[b])) {
                    best = Some(c);
                }
            }
            best
        }
    }

    fn leaving(&self, pc: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in 0..self.t.len() {
            if !self.t[i][pc].is_positive() {
                continue;
            }
            let better = match best {
                None => true,
                // Minimum ratio rhs / coefficient; ties go to the smallest
                // basis variable index, which Bland's rule needs.
                Some(bi) => match ratio_cmp(
                    &self.t[i][self.ncols],
                    &self.t[i][pc],
                    &self.t[bi][self.ncols],
                    &self.t[bi][pc],
                ) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => self.basis[i] < self.basis[bi],
                    std::cmp::Ordering::Greater => false,
                },
            };
            if better {
                best = Some(i);
            }
        }
        best
    }

    fn pivot(&mut self, pr: usize, pc: usize, obj: &mut [T]) -> Option<()> {
        let piv = self.t[pr][pc].clone();
        for cell in self.t[pr].iter_mut() {
            if !cell.is_zero() {
                *cell = cell.div(&piv)?;
            }
        }
        let pivot_row = std::mem::take(&mut self.t[pr]);
        for i in 0..self.t.len() {
            if i == pr || self.t[i][pc].is_zero() {
                continue;
            }
            let f = self.t[i][pc].clone();
            for (cell, p) in self.t[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *cell = cell.sub_mul(&f, p)?;
                }
            }
        }
        if !obj[pc].is_zero() {
            let f = obj[pc].clone();
            for (cell, p) in obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *cell = cell.sub_mul(&f, p)?;
                }
            }
        }
        self.t[pr] = pivot_row;
        self.basis[pr] = pc;
        Some(())
    }

    /// Drives leftover artificial variables out of the basis after phase 1,
    /// deleting redundant rows.
    fn purge_artificials(&mut self) -> Option<()> {
        let mut i = 0;
        while i < self.t.len() {
            if self.basis[i] < self.art_base {
                i += 1;
                continue;
            }
            debug_assert!(self.t[i][self.ncols].is_zero());
            match (0..self.art_base).find(|&c| !self.t[i][c].is_zero()) {
                Some(pc) => {
                    // Degenerate pivot at rhs zero keeps feasibility.
                    let mut dummy = vec![T::zero(); self.ncols + 1];
                    self.pivot(i, pc, &mut dummy)?;
                    i += 1;
                }
                None => {
                    self.t.remove(i);
                    self.basis.remove(i);
                }
            }
        }
        Some(())
    }
}

/// Orders `a/b` against `c/d` for positive `b`, `d`: `a*d` against `c*b`.
/// Falls back to full precision if the cross products overflow.
fn ratio_cmp<T: Scalar>(a: &T, b: &T, c: &T, d: &T) -> std::cmp::Ordering {
    match (a.mul(d), c.mul(b)) {
        (Some(l), Some(r)) => {
            if l.lt(&r) {
                std::cmp::Ordering::Less
            } else if r.lt(&l) {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        }
        _ => {
            let l = a.to_rat() / b.to_rat();
            let r = c.to_rat() / d.to_rat();
            l.cmp(&r)
        }
    }
}
