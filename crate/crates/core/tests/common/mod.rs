//! Independent oracles. Nothing here calls the library's Schur, Todd, Newton
//! or simplex code; it only borrows the polynomial container to compare.
#![allow(dead_code)]

use std::collections::BTreeMap;

use cherncert::poly::{GradedPoly, Monomial};
use cherncert::rational::{int, Rational};
use num_traits::{One, Signed, Zero};

/// Polynomial in formal roots `x_1..x_n`, keyed by exponent vector.
pub type RootPoly = BTreeMap<Vec<u32>, Rational>;

pub fn root_add(a: &RootPoly, b: &RootPoly, scale: &Rational) -> RootPoly {
    let mut out = a.clone();
    for (e, c) in b {
        let slot = out.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c * scale;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn root_mul(a: &RootPoly, b: &RootPoly, max_deg: u32) -> RootPoly {
    let mut out = RootPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if e.iter().sum::<u32>() > max_deg {
                continue;
            }
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn root_one(n: usize) -> RootPoly {
    RootPoly::from([(vec![0; n], Rational::one())])
}

/// `e_k(x_1..x_n)` by subset enumeration.
pub fn elementary(n: usize, k: usize) -> RootPoly {
    let mut out = RootPoly::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let e = (0..n).map(|i| (mask >> i) & 1).collect();
            out.insert(e, Rational::one());
        }
    }
    out
}

/// Rewrites a symmetric polynomial in the roots in terms of `c_i = e_i`, by
/// peeling off the lex-leading monomial.
pub fn symmetric_to_chern(f: &RootPoly, n: usize) -> GradedPoly {
    let mut rest = f.clone();
    let mut out = GradedPoly::zero(n);
    let es: Vec<RootPoly> = (0..=n).map(|k| elementary(n, k)).collect();
    while let Some((lead, coeff)) = rest.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "not symmetric: {lead:?}");
        let mut chern_exps = vec![0u32; n];
        let mut prod = root_one(n);
        for i in 0..n {
            let next = if i + 1 < n { lead[i + 1] } else { 0 };
            let k = lead[i] - next;
            chern_exps[i] = k;
            for _ in 0..k {
                prod = root_mul(&prod, &es[i + 1], u32::MAX);
            }
        }
        rest = root_add(&rest, &prod, &-coeff.clone());
        let m = GradedPoly::monomial(Monomial::new(chern_exps), coeff);
        out = &out + &m;
    }
    out
}

/// Recursive partition count `p(n)` via parts bounded by `k`.
pub fn partition_count(n: usize) -> usize {
    fn bounded(n: usize, k: usize) -> usize {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        bounded(n, k - 1) + if k <= n { bounded(n - k, k) } else { 0 }
    }
    bounded(n, n)
}

pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let max = parts.iter().copied().max().unwrap_or(0);
    (1..=max)
        .map(|k| parts.iter().filter(|&&p| p >= k).count() as u32)
        .collect()
}

/// Schur function `s_shape(x_1..x_n)` summed over semistandard tableaux.
pub fn schur_function(shape: &[u32], n: usize) -> RootPoly {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut out = RootPoly::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        n: usize,
        filling: &mut BTreeMap<(usize, usize), u32>,
        out: &mut RootPoly,
    ) {
        if idx == cells.len() {
            let mut e = vec![0u32; n];
            for v in filling.values() {
                e[*v as usize - 1] += 1;
            }
            *out.entry(e).or_insert_with(Rational::zero) += Rational::one();
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { filling[&(r, c - 1)] } else { 1 };
        let above = if r > 0 { filling[&(r - 1, c)] + 1 } else { 1 };
        for v in left.max(above)..=n as u32 {
            filling.insert((r, c), v);
            rec(idx + 1, cells, n, filling, out);
        }
        filling.remove(&(r, c));
    }
    rec(0, &cells, n, &mut filling, &mut out);
    out
}

/// `P_a` via the Schur function of the conjugate shape in the roots.
pub fn schur_oracle(parts: &[u32], n: usize) -> GradedPoly {
    let shape: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    symmetric_to_chern(&schur_function(&conjugate(&shape), n), n)
}

/// Power sum `sum x_i^k` rewritten in `c_i`.
pub fn power_sum_oracle(k: u32, n: usize) -> GradedPoly {
    let mut f = RootPoly::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        f.insert(e, Rational::one());
    }
    symmetric_to_chern(&f, n)
}

/// Truncated univariate series helpers.
pub mod series {
    use super::*;

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len();
        (0..n)
            .map(|k| (0..=k).fold(Rational::zero(), |s, i| s + &a[i] * &b[k - i]))
            .collect()
    }

    pub fn inverse(a: &[Rational]) -> Vec<Rational> {
        let n = a.len();
        let mut b = vec![Rational::zero(); n];
        b[0] = a[0].recip();
        for k in 1..n {
            let s = (1..=k).fold(Rational::zero(), |s, i| s + &a[i] * &b[k - i]);
            b[k] = -s / &a[0];
        }
        b
    }

    /// `log(a)` for `a[0] == 1` via `sum (-1)^{k+1} u^k / k`, `u = a - 1`.
    pub fn log(a: &[Rational]) -> Vec<Rational> {
        let n = a.len();
        let mut u = a.to_vec();
        u[0] = Rational::zero();
        let mut out = vec![Rational::zero(); n];
        let mut power = u.clone();
        for k in 1..n {
            let s = if k % 2 == 1 { int(1) } else { int(-1) } / int(k as i64);
            for i in 0..n {
                out[i] += &power[i] * &s;
            }
            power = mul(&power, &u);
        }
        out
    }

    pub fn exp_neg(k: i64, n: usize) -> Vec<Rational> {
        // e^{-k x}
        let mut out = Vec::with_capacity(n);
        let mut term = Rational::one();
        for m in 0..n {
            out.push(term.clone());
            term = term * int(-k) / int(m as i64 + 1);
        }
        out
    }
}

/// `sum_p y^p χ^p` (tangent convention) from the single per-root factor
/// `(1 + y e^{-x}) x / (1 - e^{-x})`, evaluated at a rational `y != -1`.
pub fn chi_y_oracle(n: usize, y: &Rational) -> GradedPoly {
    let len = n + 1;
    // (1 - e^{-x})/x
    let mut base = vec![Rational::zero(); len];
    let e = series::exp_neg(1, len + 1);
    for k in 0..len {
        base[k] = -e[k + 1].clone();
    }
    let todd = series::inverse(&base);
    let one_plus_y = Rational::one() + y;
    let twist: Vec<Rational> = series::exp_neg(1, len)
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let v = c * y + if k == 0 { Rational::one() } else { Rational::zero() };
            v / &one_plus_y
        })
        .collect();
    let factor = series::mul(&twist, &todd);
    let logf = series::log(&factor);
    let mut exponent = GradedPoly::zero(n);
    for m in 1..=n {
        exponent = &exponent + &power_sum_oracle(m as u32, n).scale(&logf[m]);
    }
    let mut expo = GradedPoly::one(n);
    let mut power = GradedPoly::one(n);
    let mut fact = Rational::one();
    for k in 1..=n {
        power = &power * &exponent;
        fact *= int(k as i64);
        expo = &expo + &power.scale(&fact.recip());
    }
    let mut scale = Rational::one();
    for _ in 0..n {
        scale *= &one_plus_y;
    }
    expo.scale(&scale)
}

/// Fourier–Motzkin feasibility of `{λ >= 0 : G λ = t}`; `columns[j]` is `G e_j`.
pub fn fourier_motzkin_feasible(columns: &[Vec<Rational>], target: &[Rational]) -> bool {
    let k = columns.len();
    // rows: (a, b) meaning a·λ <= b
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for (i, t) in target.iter().enumerate() {
        let a: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
        rows.push((a.iter().map(|x| -x).collect(), -t.clone()));
        rows.push((a, t.clone()));
    }
    for j in 0..k {
        let mut a = vec![Rational::zero(); k];
        a[j] = int(-1);
        rows.push((a, Rational::zero()));
    }
    for j in 0..k {
        let (pos, rest): (Vec<_>, Vec<_>) = rows.into_iter().partition(|(a, _)| a[j].is_positive());
        let (neg, zero): (Vec<_>, Vec<_>) = rest.into_iter().partition(|(a, _)| a[j].is_negative());
        let mut next = zero;
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let sp = ap[j].clone();
                let sn = -an[j].clone();
                let a: Vec<Rational> = ap.iter().zip(an).map(|(x, y)| x / &sp + y / &sn).collect();
                let b = bp / &sp + bn / &sn;
                next.push((a, b));
            }
        }
        next.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
        next.dedup();
        rows = next;
    }
    rows.iter().all(|(_, b)| !b.is_negative())
}

/// `(1+h)^{a} (1+dh)^{-1}` coefficients up to `h^n` by long division.
pub fn hyperplane_class(ambient: usize, degree: i64, n: usize) -> Vec<Rational> {
    let mut num: Vec<Rational> = (0..=n)
        .map(|i| {
            let mut c = int(1);
            for j in 0..i {
                c = c * int((ambient + 1 - j) as i64) / int(j as i64 + 1);
            }
            c
        })
        .collect();
    let mut q = vec![Rational::zero(); n + 1];
    for i in 0..=n {
        q[i] = num[i].clone();
        if i < n {
            num[i + 1] -= &q[i] * int(degree);
        }
    }
    q
}
