//! Exact truncated power series with integer coefficients, and the
//! counting pipeline for rooted essentially 3-connected toroidal maps.
//!
//! Bivariate series are truncated by total degree; all arithmetic is over
//! `i128` and every division asserts exactness, so each identity below is
//! checked coefficient-exactly.

use crate::error::{MapError, Result};

/// Univariate series truncated at degree `ord` inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniSeries {
    pub c: Vec<i128>,
}

impl UniSeries {
    pub fn zero(ord: usize) -> UniSeries {
        UniSeries { c: vec![0; ord + 1] }
    }
    pub fn constant(ord: usize, v: i128) -> UniSeries {
        let mut s = UniSeries::zero(ord);
        s.c[0] = v;
        s
    }
    pub fn one(ord: usize) -> UniSeries {
        UniSeries::constant(ord, 1)
    }
    pub fn var(ord: usize) -> UniSeries {
        let mut s = UniSeries::zero(ord);
        if ord >= 1 {
            s.c[1] = 1;
        }
        s
    }
    pub fn ord(&self) -> usize {
        self.c.len() - 1
    }
    pub fn coeff(&self, k: usize) -> i128 {
        if k < self.c.len() {
            self.c[k]
        } else {
            0
        }
    }

    pub fn add(&self, o: &UniSeries) -> UniSeries {
        let ord = self.ord().min(o.ord());
        UniSeries { c: (0..=ord).map(|k| self.c[k] + o.c[k]).collect() }
    }
    pub fn sub(&self, o: &UniSeries) -> UniSeries {
        let ord = self.ord().min(o.ord());
        UniSeries { c: (0..=ord).map(|k| self.c[k] - o.c[k]).collect() }
    }
    pub fn mul(&self, o: &UniSeries) -> UniSeries {
        let ord = self.ord().min(o.ord());
        let mut c = vec![0i128; ord + 1];
        for i in 0..=ord.min(self.ord()) {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..=(ord - i).min(o.ord()) {
                c[i + j] += self.c[i] * o.c[j];
            }
        }
        UniSeries { c }
    }
    pub fn scale(&self, v: i128) -> UniSeries {
        UniSeries { c: self.c.iter().map(|x| x * v).collect() }
    }

    /// Exact division; panics when a coefficient fails to divide.
    pub fn div_exact(&self, den: &UniSeries) -> UniSeries {
        let ord = self.ord().min(den.ord());
        assert!(den.c[0] != 0, "division requires a unit constant term");
        let mut q = vec![0i128; ord + 1];
        for k in 0..=ord {
            let mut acc = self.c[k];
            for j in 0..k {
                acc -= q[j] * den.coeff(k - j);
            }
            assert_eq!(acc % den.c[0], 0, "inexact series division");
            q[k] = acc / den.c[0];
        }
        UniSeries { c: q }
    }

    pub fn pow(&self, mut e: u32) -> UniSeries {
        let mut acc = UniSeries::one(self.ord());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Composition `self(g)` where `g` has zero constant term.
    pub fn compose(&self, g: &UniSeries) -> UniSeries {
        assert_eq!(g.c[0], 0, "composition requires valuation >= 1");
        let ord = g.ord();
        let mut acc = UniSeries::zero(ord);
        // Horner from the top coefficient down
        for k in (0..=self.ord().min(ord)).rev() {
            acc = acc.mul(g);
            acc.c[0] += self.c[k];
        }
        acc
    }
}

/// Bivariate series truncated by total degree `ord` inclusive.
/// Coefficient of `x^i y^j` stored at `i * (ord + 1) + j` for `i + j <= ord`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    ord: usize,
    c: Vec<i128>,
}

impl BiSeries {
    pub fn zero(ord: usize) -> BiSeries {
        BiSeries { ord, c: vec![0; (ord + 1) * (ord + 1)] }
    }
    pub fn constant(ord: usize, v: i128) -> BiSeries {
        let mut s = BiSeries::zero(ord);
        s.c[0] = v;
        s
    }
    pub fn one(ord: usize) -> BiSeries {
        BiSeries::constant(ord, 1)
    }
    /// The first variable (conjugate to black counts).
    pub fn var_x(ord: usize) -> BiSeries {
        let mut s = BiSeries::zero(ord);
        if ord >= 1 {
            s.c[ord + 1] = 1;
        }
        s
    }
    /// The second variable (conjugate to white counts).
    pub fn var_y(ord: usize) -> BiSeries {
        let mut s = BiSeries::zero(ord);
        if ord >= 1 {
            s.c[1] = 1;
        }
        s
    }
    pub fn ord(&self) -> usize {
        self.ord
    }
    pub fn coeff(&self, i: usize, j: usize) -> i128 {
        if i + j <= self.ord {
            self.c[i * (self.ord + 1) + j]
        } else {
            0
        }
    }
    pub fn set_coeff(&mut self, i: usize, j: usize, v: i128) {
        assert!(i + j <= self.ord);
        self.c[i * (self.ord + 1) + j] = v;
    }

    pub fn add(&self, o: &BiSeries) -> BiSeries {
        self.zip(o, |a, b| a + b)
    }
    pub fn sub(&self, o: &BiSeries) -> BiSeries {
        self.zip(o, |a, b| a - b)
    }
    fn zip(&self, o: &BiSeries, f: impl Fn(i128, i128) -> i128) -> BiSeries {
        let ord = self.ord.min(o.ord);
        let mut s = BiSeries::zero(ord);
        for i in 0..=ord {
            for j in 0..=ord - i {
                s.set_coeff(i, j, f(self.coeff(i, j), o.coeff(i, j)));
            }
        }
        s
    }
    pub fn scale(&self, v: i128) -> BiSeries {
        let mut s = self.clone();
        for x in &mut s.c {
            *x *= v;
        }
        s
    }

    pub fn mul(&self, o: &BiSeries) -> BiSeries {
        let ord = self.ord.min(o.ord);
        let mut s = BiSeries::zero(ord);
        for i1 in 0..=self.ord.min(ord) {
            for j1 in 0..=self.ord - i1 {
                let a = self.coeff(i1, j1);
                if a == 0 || i1 + j1 > ord {
                    continue;
                }
                let rest = ord - i1 - j1;
                for i2 in 0..=rest.min(o.ord) {
                    for j2 in 0..=(rest - i2).min(o.ord.saturating_sub(i2)) {
                        let b = o.coeff(i2, j2);
                        if b != 0 {
                            s.c[(i1 + i2) * (ord + 1) + (j1 + j2)] += a * b;
                        }
                    }
                }
            }
        }
        s
    }

    /// Exact division in graded-lexicographic order; asserts divisibility.
    pub fn div_exact(&self, den: &BiSeries) -> BiSeries {
        let ord = self.ord.min(den.ord);
        let d0 = den.coeff(0, 0);
        assert!(d0 != 0, "division requires a unit constant term");
        let mut q = BiSeries::zero(ord);
        for deg in 0..=ord {
            for i in 0..=deg {
                let j = deg - i;
                let mut acc = self.coeff(i, j);
                for a in 0..=i {
                    for b in 0..=j {
                        if a + b == 0 {
                            continue;
                        }
                        acc -= den.coeff(a, b) * q.coeff(i - a, j - b);
                    }
                }
                assert_eq!(acc % d0, 0, "inexact series division");
                q.set_coeff(i, j, acc / d0);
            }
        }
        q
    }

    pub fn inverse(&self) -> BiSeries {
        assert!(
            self.coeff(0, 0) == 1 || self.coeff(0, 0) == -1,
            "inverse requires constant term +-1"
        );
        BiSeries::one(self.ord).div_exact(self)
    }

    pub fn pow(&self, mut e: u32) -> BiSeries {
        let mut acc = BiSeries::one(self.ord);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Swap the two variables.
    pub fn swapped(&self) -> BiSeries {
        let mut s = BiSeries::zero(self.ord);
        for i in 0..=self.ord {
            for j in 0..=self.ord - i {
                s.set_coeff(j, i, self.coeff(i, j));
            }
        }
        s
    }

    /// Diagonal specialization: both variables set to the same `z`.
    pub fn diagonal(&self) -> UniSeries {
        let mut u = UniSeries::zero(self.ord);
        for i in 0..=self.ord {
            for j in 0..=self.ord - i {
                u.c[i + j] += self.coeff(i, j);
            }
        }
        u
    }

    /// Substitution of a univariate series: `f(g)` where `g` is bivariate
    /// with zero constant term.
    pub fn compose_uni(f: &UniSeries, g: &BiSeries) -> BiSeries {
        assert_eq!(g.coeff(0, 0), 0, "composition requires valuation >= 1");
        let ord = g.ord;
        let mut acc = BiSeries::zero(ord);
        for k in (0..=f.ord().min(ord)).rev() {
            acc = acc.mul(g);
            acc.c[0] += f.c[k];
        }
        acc
    }
}

/// The pair of algebraic series defined by `x = X (1 + y')^2`,
/// `y = Y (1 + x')^2` solved by fixed-point iteration; each pass is exact
/// in the graded ring and gains at least one degree.
pub fn solve_r(ord: usize) -> (BiSeries, BiSeries) {
    let zb = BiSeries::var_x(ord);
    let zw = BiSeries::var_y(ord);
    let one = BiSeries::one(ord);
    let mut rb = BiSeries::zero(ord);
    let mut rw = BiSeries::zero(ord);
    for _ in 0..=ord {
        let nrb = zb.mul(&one.add(&rw).pow(2));
        let nrw = zw.mul(&one.add(&rb).pow(2));
        rb = nrb;
        rw = nrw;
    }
    debug_assert_eq!(rb, zb.mul(&BiSeries::one(ord).add(&rw).pow(2)));
    debug_assert_eq!(rw, zw.mul(&BiSeries::one(ord).add(&rb).pow(2)));
    (rb, rw)
}

/// Bivariate count of rooted essentially 3-connected toroidal maps, first
/// variable conjugate to faces, second to vertices.  Both printed forms of
/// the rational expression are computed and must agree.
pub fn t_series(ord: usize) -> BiSeries {
    let (rb, rw) = solve_r(ord);
    let one = BiSeries::one(ord);
    // explicit form
    let num = rb.mul(&rw).mul(
        &rb.pow(2)
            .add(&rw.pow(2))
            .add(&rb.mul(&rw))
            .add(&rb.scale(2))
            .add(&rw.scale(2))
            .add(&one),
    );
    let s = one.add(&rb).add(&rw);
    let p = rb.mul(&rw);
    let den = s.mul(&s.sub(&p.scale(3)).pow(2));
    let t1 = num.div_exact(&den);
    // factored form p/(s-3p)^2 * (s - p/s)
    let t2 = p
        .div_exact(&s.sub(&p.scale(3)).pow(2))
        .mul(&s.sub(&p.div_exact(&s)));
    assert_eq!(t1, t2, "the two printed forms must agree");
    t1
}

/// Edge count specialization: `r = z (1+r)^2`,
/// `T_e = r^2 (1+r) / ((1+2r)(1-r)^2(1+3r))`.
pub fn t_e(ord: usize) -> UniSeries {
    let z = UniSeries::var(ord);
    let one = UniSeries::one(ord);
    let mut r = UniSeries::zero(ord);
    for _ in 0..=ord {
        r = z.mul(&one.add(&r).pow(2));
    }
    let num = r.pow(2).mul(&one.add(&r));
    let den = one
        .add(&r.scale(2))
        .mul(&one.sub(&r).pow(2))
        .mul(&one.add(&r.scale(3)));
    num.div_exact(&den)
}

/// Vertex count specialization: `r = z (2 + 2r + r^2)^2`,
/// `T_v = (r+1)(r^2+3r+4) r / ((3r^2+2r-2)^2 (r+2))`.
pub fn t_v(ord: usize) -> UniSeries {
    let z = UniSeries::var(ord);
    let one = UniSeries::one(ord);
    let mut r = UniSeries::zero(ord);
    for _ in 0..=ord {
        let inner = UniSeries::constant(ord, 2).add(&r.scale(2)).add(&r.pow(2));
        r = z.mul(&inner.pow(2));
    }
    let num = r
        .add(&one)
        .mul(&r.pow(2).add(&r.scale(3)).add(&UniSeries::constant(ord, 4)))
        .mul(&r);
    let den = r
        .pow(2)
        .scale(3)
        .add(&r.scale(2))
        .sub(&UniSeries::constant(ord, 2))
        .pow(2)
        .mul(&r.add(&UniSeries::constant(ord, 2)));
    num.div_exact(&den)
}

/// Triangulation specialization: `r = z (1+r)^4`, `T_t = r / (1-3r)^2`.
pub fn t_t(ord: usize) -> UniSeries {
    let z = UniSeries::var(ord);
    let one = UniSeries::one(ord);
    let mut r = UniSeries::zero(ord);
    for _ in 0..=ord {
        r = z.mul(&one.add(&r).pow(4));
    }
    r.div_exact(&one.sub(&r.scale(3)).pow(2))
}

/// Non-empty Dyck path series `U = t (1+U)^2`, `t` conjugate to half-length.
pub fn dyck_u(ord: usize) -> UniSeries {
    let t = UniSeries::var(ord);
    let one = UniSeries::one(ord);
    let mut u = UniSeries::zero(ord);
    for _ in 0..=ord {
        u = t.mul(&one.add(&u).pow(2));
    }
    u
}

/// Bridge series `B = (1+U)/(1-U)`, equal to the walk series ending at 0.
pub fn bridges(ord: usize) -> UniSeries {
    let u = dyck_u(ord);
    let one = UniSeries::one(ord);
    one.add(&u).div_exact(&one.sub(&u))
}

/// Lattice-walk series: coefficient of `t^(floor(n/2))` counts walks of
/// length `n` with steps +-1 from 0 to `i`.  `P^(i) = B (1+U)^|i| t^(floor(|i|/2))`.
pub fn walk_series(i: i64, ord: usize) -> UniSeries {
    let i = i.unsigned_abs() as usize;
    let b = bridges(ord);
    let one = UniSeries::one(ord);
    let u = dyck_u(ord);
    let mut s = b.mul(&one.add(&u).pow(i as u32));
    // shift by floor(i/2)
    let sh = i / 2;
    let mut c = vec![0i128; ord + 1];
    for k in 0..=ord {
        if k + sh <= ord {
            c[k + sh] = s.c[k];
        }
    }
    s.c = c;
    s
}

/// Everything the caterpillar/skeleton pipeline produces, with the closed
/// forms it was checked against.
pub struct Pipeline {
    pub n: BiSeries,
    pub h: BiSeries,
    pub t: BiSeries,
    pub s_ww: BiSeries,
    pub s_bb: BiSeries,
    pub s_bw: BiSeries,
    pub d: BiSeries,
}

/// Assembles the kernel-rooted series by summing cubes of caterpillar
/// series over the common score, substitutes the tree series, and checks
/// the closed forms: the skeleton sum against its rational expression, the
/// total against the closed form for the kernel-rooted series, and finally
/// the product form against the direct bivariate count.
pub fn n_pipeline(ord: usize) -> Result<Pipeline> {
    let one = BiSeries::one(ord);
    let (rb, rw) = solve_r(ord);
    let cap_rb = one.add(&rb);
    let cap_rw = one.add(&rw);

    // Caterpillar score sums.  P^(i) has valuation floor(|i|/2) in t, so
    // cubes with |i| <= 2*ord already cover every term up to total degree
    // ord; the substituted argument has valuation 2, making the univariate
    // bound ord/2 + 1 generous.
    let uord = ord;
    let mut g_odd = UniSeries::zero(uord);
    let mut g_even = walk_series(0, uord).pow(3);
    let mut i = 1i64;
    while i as usize <= 2 * uord + 1 {
        let cube = walk_series(i, uord).pow(3);
        if i % 2 == 1 {
            g_odd = g_odd.add(&cube.scale(2)); // i and -i
        } else {
            g_even = g_even.add(&cube.scale(2));
        }
        i += 1;
    }

    // closed form of the odd sum: 2 / ((1-t)(1-4t)^2)
    {
        let t = UniSeries::var(uord);
        let oneu = UniSeries::one(uord);
        let closed = UniSeries::constant(uord, 2)
            .div_exact(&oneu.sub(&t).mul(&oneu.sub(&t.scale(4)).pow(2)));
        if g_odd != closed {
            return Err(MapError::ClosedFormMismatch);
        }
    }

    // Skeleton series in the caterpillar variables (tb, tw):
    //   S_ww = tb^3 * G_odd(tb tw),  S_bb = tw^3 * G_odd(tb tw),
    //   S_bw = G_even(tb tw).
    let tb = BiSeries::var_x(ord);
    let tw = BiSeries::var_y(ord);
    let tbtw = tb.mul(&tw);
    let s_ww = tb.pow(3).mul(&BiSeries::compose_uni(&g_odd, &tbtw));
    let s_bb = tw.pow(3).mul(&BiSeries::compose_uni(&g_odd, &tbtw));
    let s_bw = BiSeries::compose_uni(&g_even, &tbtw);
    debug_assert_eq!(s_bb, s_ww.swapped());

    // Substitute tb -> zb*Rw, tw -> zw*Rb and attach the kernel nodes.
    let zb = BiSeries::var_x(ord);
    let zw = BiSeries::var_y(ord);
    let arg_b = zb.mul(&cap_rw);
    let arg_w = zw.mul(&cap_rb);
    let subst = |s: &BiSeries| -> BiSeries {
        // s is a polynomial in (tb, tw); evaluate at (arg_b, arg_w)
        let mut acc = BiSeries::zero(ord);
        let mut pow_b = vec![BiSeries::one(ord)];
        let mut pow_w = vec![BiSeries::one(ord)];
        for a in 1..=ord {
            pow_b.push(pow_b[a - 1].mul(&arg_b));
            pow_w.push(pow_w[a - 1].mul(&arg_w));
        }
        for a in 0..=ord {
            for b in 0..=ord - a {
                let c = s.coeff(a, b);
                if c != 0 {
                    acc = acc.add(&pow_b[a].mul(&pow_w[b]).scale(c));
                }
            }
        }
        acc
    };
    let n_ww = zw.pow(2).mul(&subst(&s_ww));
    let n_bb = zb.pow(2).mul(&subst(&s_bb));
    let n_bw = zb.mul(&zw).mul(&subst(&s_bw));

    // closed form for the white-white part:
    //   2 zw^2 zb^3 Rw^3 / ((1 - Rb Rw zb zw)(1 - 4 Rb Rw zb zw)^2)
    {
        let prod = cap_rb.mul(&cap_rw).mul(&zb).mul(&zw);
        let den = one.sub(&prod).mul(&one.sub(&prod.scale(4)).pow(2));
        let closed = zw
            .pow(2)
            .mul(&zb.pow(3))
            .mul(&cap_rw.pow(3))
            .scale(2)
            .div_exact(&den);
        if n_ww != closed {
            return Err(MapError::ClosedFormMismatch);
        }
    }

    let n = n_bb.add(&n_bw.scale(2)).add(&n_ww);

    // closed form for the kernel-rooted series:
    //   2 rb rw (1 + 2rb + 2rw + rb rw + rb^2 + rw^2)
    //   / ((1+rb)(1+rw)(1+rb+rw)(1+rb+rw-3 rb rw)^2)
    {
        let s = one.add(&rb).add(&rw);
        let p = rb.mul(&rw);
        let num = rb
            .mul(&rw)
            .scale(2)
            .mul(&one.add(&rb.scale(2)).add(&rw.scale(2)).add(&p).add(&rb.pow(2)).add(&rw.pow(2)));
        let den = cap_rb.mul(&cap_rw).mul(&s).mul(&s.sub(&p.scale(3)).pow(2));
        let closed = num.div_exact(&den);
        if n != closed {
            return Err(MapError::ClosedFormMismatch);
        }
    }

    // halving (every coefficient must be even) and the final product form
    let mut h = n.clone();
    for x in &mut h.c {
        if *x % 2 != 0 {
            return Err(MapError::ClosedFormMismatch);
        }
        *x /= 2;
    }
    let t = cap_rb.mul(&cap_rw).mul(&h);
    if t != t_series(ord) {
        return Err(MapError::ClosedFormMismatch);
    }
    let d = cap_rb.mul(&cap_rw);
    Ok(Pipeline { n, h, t, s_ww, s_bb, s_bw, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_r_first_terms() {
        let (rb, rw) = solve_r(4);
        assert_eq!(rb.coeff(1, 0), 1);
        assert_eq!(rb.coeff(1, 1), 2);
        assert_eq!(rw.coeff(0, 1), 1);
        assert_eq!(rw, rb.swapped());
        // diagonal satisfies the Catalan-type recurrence r = z(1+r)^2
        let diag = rb.diagonal();
        assert_eq!(&diag.c[1..5], &[1, 2, 5, 14]);
    }

    #[test]
    fn t_series_initial_terms() {
        let t = t_series(8);
        assert_eq!(t.coeff(1, 1), 1);
        assert_eq!(t.coeff(2, 1), 1);
        assert_eq!(t.coeff(1, 2), 1);
        assert_eq!(t.coeff(2, 2), 11);
        assert_eq!(t.coeff(3, 2), 20);
        assert_eq!(t.coeff(2, 3), 20);
        assert_eq!(t.coeff(4, 2), 10);
        assert_eq!(t.coeff(3, 3), 146);
        assert_eq!(t.coeff(2, 4), 10);
        assert_eq!(t.coeff(4, 3), 329);
        assert_eq!(t.coeff(3, 4), 329);
        assert_eq!(t.coeff(5, 3), 300);
        assert_eq!(t.coeff(4, 4), 2047);
        assert_eq!(t.coeff(3, 5), 300);
        assert_eq!(t, t.swapped());
    }

    #[test]
    fn univariate_specializations() {
        let te = t_e(9);
        assert_eq!(&te.c[2..=9], &[1, 2, 11, 40, 166, 658, 2647, 10592]);
        // T_e is also the diagonal of the bivariate series
        assert_eq!(te.c[..9], t_series(8).diagonal().c[..9]);
        let tv = t_v(6);
        assert_eq!(&tv.c[1..=6], &[2, 42, 892, 18888, 399280, 8431776]);
        let tt = t_t(7);
        assert_eq!(&tt.c[1..=7], &[1, 10, 97, 932, 8916, 85090, 810846]);
    }

    #[test]
    fn dyck_and_bridges() {
        let u = dyck_u(4);
        assert_eq!(&u.c[..], &[0, 1, 2, 5, 14]);
        let b = bridges(3);
        assert_eq!(&b.c[..], &[1, 2, 6, 20]);
    }

    /// Independent oracle: count +-1 walks from 0 to i directly.
    fn walk_count(n: usize, target: i64) -> i128 {
        let mut count = 0i128;
        for mask in 0..(1u32 << n) {
            let mut pos = 0i64;
            for b in 0..n {
                pos += if mask >> b & 1 == 1 { 1 } else { -1 };
            }
            if pos == target {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn walk_series_against_enumeration() {
        for i in 0..=3i64 {
            let p = walk_series(i, 4);
            for n in 0..=8usize {
                if (n as i64 - i) % 2 != 0 {
                    continue;
                }
                let expect = walk_count(n, i);
                assert_eq!(p.coeff(n / 2), expect, "walks of length {n} to {i}");
            }
            assert_eq!(p, walk_series(-i, 4));
        }
    }

    #[test]
    fn pipeline_to_degree_six() {
        let pl = n_pipeline(6).unwrap();
        // the smallest balanced unicellular map gives two kernel-rooted
        // classes with one black and one white node
        assert_eq!(pl.n.coeff(1, 1), 2);
        assert_eq!(pl.h.coeff(1, 1), 1);
        assert_eq!(pl.t.coeff(1, 1), 1);
        assert_eq!(pl.s_bw, pl.s_bw.swapped());
    }

    #[test]
    fn series_ring_properties() {
        let (rb, rw) = solve_r(6);
        let a = rb.add(&rw.pow(2));
        let b = rw.sub(&rb.mul(&rw));
        let c = BiSeries::one(6).add(&rb);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(c.mul(&c.inverse()), BiSeries::one(6));
    }
}
