//! Partial (exponential) Bell polynomials `B_{m,t}(a_1, …, a_{m-t+1})`.

use super::real::Real;

/// `B_{m,t}(a_1, …)` with `a[0] = a_1`, by the recurrence
/// `B_{m,t} = Σ_{i=1}^{m-t+1} C(m-1, i-1) a_i B_{m-i,t-1}`.
///
/// `B_{0,0} = 1`, and `B_{m,t} = 0` whenever `t > m` or exactly one of `m`,
/// `t` is zero.
pub fn bell_polynomial(m: usize, t: usize, a: &[f64]) -> f64 {
    bell_polynomial_in(&1.0, m, t, a)
}

pub fn bell_polynomial_in<R: Real>(one: &R, m: usize, t: usize, a: &[f64]) -> R {
    let args: Vec<R> = a.iter().map(|&x| one.lift(x)).collect();
    bell_table(one, m, t, &args)[m][t].clone()
}

/// Table `B[j][u]` for `j ≤ m`, `u ≤ t`.
fn bell_table<R: Real>(one: &R, m: usize, t: usize, a: &[R]) -> Vec<Vec<R>> {
    let zero = one.zero_like();
    if t > m {
        let mut table = vec![vec![zero; t + 1]; m + 1];
        if m == 0 {
            table[0][0] = one.clone();
        }
        return table;
    }
    assert!(
        t == 0 || a.len() >= m - t + 1,
        "B_{{{m},{t}}} needs {} arguments, got {}",
        m - t + 1,
        a.len()
    );
    // entries B[j][u] with small u read past a_{m-t+1}; they never feed
    // B[m][t], so zero padding is exact
    let mut a = a.to_vec();
    a.resize(m.max(1), zero.clone());
    let binom = pascal(one, m);
    let mut table = vec![vec![zero.clone(); t + 1]; m + 1];
    table[0][0] = one.clone();
    for u in 1..=t {
        for j in u..=m {
            let mut acc = zero.clone();
            for i in 1..=(j - u + 1) {
                let prev = &table[j - i][u - 1];
                acc = acc + binom[j - 1][i - 1].clone() * a[i - 1].clone() * prev.clone();
            }
            table[j][u] = acc;
        }
    }
    table
}

/// Binomial coefficients `C(r, k)` for `r < rows` by Pascal's rule, exact in
/// any precision that holds the integers.
fn pascal<R: Real>(one: &R, rows: usize) -> Vec<Vec<R>> {
    let mut tri: Vec<Vec<R>> = Vec::with_capacity(rows.max(1));
    for r in 0..rows.max(1) {
        let mut row = Vec::with_capacity(r + 1);
        for k in 0..=r {
            if k == 0 || k == r {
                row.push(one.clone());
            } else {
                row.push(tri[r - 1][k - 1].clone() + tri[r - 1][k].clone());
            }
        }
        tri.push(row);
    }
    tri
}

/// `B_{m,t}` straight from its definition as a sum over the partitions of
/// `m` into exactly `t` parts:
/// `Σ m! / (j_1! j_2! …) Π (a_i / i!)^{j_i}` over `Σ j_i = t`, `Σ i j_i = m`.
pub fn bell_polynomial_by_partitions(m: usize, t: usize, a: &[f64]) -> f64 {
    if m == 0 && t == 0 {
        return 1.0;
    }
    if t == 0 || t > m {
        return 0.0;
    }
    let max_part = m - t + 1;
    let mut mult = vec![0usize; max_part + 1];
    let mut total = 0.0;
    enumerate(max_part, m, t, &mut mult, &mut |mult| {
        let mut term = factorial(m);
        for (i, &j) in mult.iter().enumerate().skip(1) {
            if j > 0 {
                term *= (a[i - 1] / factorial(i)).powi(j as i32) / factorial(j);
            }
        }
        total += term;
    });
    total
}

/// Visits every multiplicity vector with parts `≤ largest` summing to
/// `remaining` using exactly `parts` parts.
fn enumerate<F: FnMut(&[usize])>(
    largest: usize,
    remaining: usize,
    parts: usize,
    mult: &mut Vec<usize>,
    visit: &mut F,
) {
    if remaining == 0 && parts == 0 {
        visit(mult);
        return;
    }
    if largest == 0 || parts == 0 || remaining < parts || remaining > parts * largest {
        return;
    }
    let max_j = (remaining / largest).min(parts);
    for j in (0..=max_j).rev() {
        mult[largest] = j;
        enumerate(largest - 1, remaining - j * largest, parts - j, mult, visit);
    }
    mult[largest] = 0;
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Coefficients of `c(x)^s` through Bell polynomials:
/// `coeff_k = s!/(k+s)! B_{k+s,s}(1! c_0, 2! c_1, …, (k+1)! c_k)`, with
/// `c_i = 0` beyond the degree of `c`.
pub fn power_coeffs_via_bell<R: Real>(one: &R, c: &[f64], s: usize) -> Vec<R> {
    let lifted: Vec<R> = c.iter().map(|&x| one.lift(x)).collect();
    power_coeffs_via_bell_in(one, &lifted, s)
}

/// [`power_coeffs_via_bell`] for coefficients already held at working
/// precision.
pub fn power_coeffs_via_bell_in<R: Real>(one: &R, c: &[R], s: usize) -> Vec<R> {
    let degree = c.len() - 1;
    let top = s * degree;
    let m_max = top + s;
    let mut fact = vec![one.clone()];
    for i in 1..=m_max {
        let next = fact[i - 1].clone() * one.lift(i as f64);
        fact.push(next);
    }
    // a_i = i! c_{i-1}
    let args: Vec<R> = (1..=m_max - s + 1)
        .map(|i| match c.get(i - 1) {
            Some(ci) => fact[i].clone() * ci.clone(),
            None => one.zero_like(),
        })
        .collect();
    let table = bell_table(one, m_max, s, &args);
    (0..=top)
        .map(|k| fact[s].clone() / fact[k + s].clone() * table[k + s][s].clone())
        .collect()
}
