//! Slow, direct reference computations for symmetric-group characters,
//! plethysm and chromatic polynomials. Nothing here shares code with the
//! engine; partitions are plain weakly decreasing `Vec<usize>`.

use std::collections::HashMap;

use itertools::Itertools;
use num::{BigInt, BigRational, One, Zero};
use num_complex::Complex64;

/// Exponent vector to coefficient.
pub type Poly = HashMap<Vec<u8>, BigInt>;

/// Partitions of `n` by recursive largest-part descent.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `z_μ = Π_i i^{m_i} m_i!`.
pub fn z(mu: &[usize]) -> BigInt {
    let mut out = BigInt::one();
    for (part, group) in &mu.iter().chunk_by(|&&x| x) {
        let m = group.count();
        for j in 1..=m {
            out *= BigInt::from(part) * BigInt::from(j);
        }
    }
    out
}

fn add_into(acc: &mut Poly, exps: Vec<u8>, c: BigInt) {
    *acc.entry(exps).or_insert_with(BigInt::zero) += c;
}

fn prune(mut p: Poly) -> Poly {
    p.retain(|_, c| !c.is_zero());
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, e, ca * cb);
        }
    }
    prune(out)
}

fn power_sum_poly(mu: &[usize], vars: usize) -> Poly {
    let mut acc: Poly = HashMap::from([(vec![0; vars], BigInt::one())]);
    for &k in mu {
        let mut pk = Poly::new();
        for v in 0..vars {
            let mut e = vec![0u8; vars];
            e[v] = k as u8;
            pk.insert(e, BigInt::one());
        }
        acc = poly_mul(&acc, &pk);
    }
    acc
}

fn sign(perm: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                s = -s;
            }
        }
    }
    s
}

/// Frobenius' formula: `χ^λ_μ = [x^{λ+δ}] a_δ(x) p_μ(x)` in `ℓ(λ)` variables.
pub fn frobenius_character(lambda: &[usize], mu: &[usize]) -> BigInt {
    let l = lambda.len();
    let p = power_sum_poly(mu, l);
    let target: Vec<i64> = (0..l).map(|i| (lambda[i] + l - 1 - i) as i64).collect();
    let mut total = BigInt::zero();
    for perm in (0..l).permutations(l) {
        let shifted: Option<Vec<u8>> = (0..l)
            .map(|i| {
                let e = target[i] - (l - 1 - perm[i]) as i64;
                (e >= 0).then_some(e as u8)
            })
            .collect();
        if let Some(c) = shifted.and_then(|e| p.get(&e)) {
            total += c * sign(&perm);
        }
    }
    total
}

/// Full character table, rows and columns in [`partitions`] order.
pub fn character_table(n: usize) -> Vec<Vec<BigInt>> {
    let parts = partitions(n);
    parts
        .iter()
        .map(|l| parts.iter().map(|m| frobenius_character(l, m)).collect())
        .collect()
}

/// `g_{λμν} = Σ_ρ χ^λ_ρ χ^μ_ρ χ^ν_ρ / z_ρ`, as a map `ν -> g`.
pub fn kronecker_product(lambda: &[usize], mu: &[usize]) -> Vec<(Vec<usize>, BigInt)> {
    let n: usize = lambda.iter().sum();
    let parts = partitions(n);
    let chi = |a: &[usize], r: &[usize]| frobenius_character(a, r);
    let mut out = Vec::new();
    for nu in &parts {
        let g: BigRational = parts
            .iter()
            .map(|rho| {
                BigRational::new(chi(lambda, rho) * chi(mu, rho) * chi(nu, rho), z(rho))
            })
            .sum();
        assert!(g.is_integer());
        if !g.is_zero() {
            out.push((nu.clone(), g.to_integer()));
        }
    }
    out
}

/// Exponent vectors of the semistandard tableaux of shape `lambda` with
/// entries in `0..vars`, one per tableau.
pub fn ssyt_monomials(lambda: &[usize], vars: usize) -> Vec<Vec<usize>> {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        vars: usize,
        filling: &mut HashMap<(usize, usize), usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == cells.len() {
            let mut e = vec![0; vars];
            for v in filling.values() {
                e[*v] += 1;
            }
            out.push(e);
            return;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { filling[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { filling[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..vars {
            filling.insert((r, c), v);
            go(i + 1, cells, vars, filling, out);
        }
        filling.remove(&(r, c));
    }
    let mut out = Vec::new();
    go(0, &cells, vars, &mut HashMap::new(), &mut out);
    out
}

/// `s_λ(x_1, .., x_vars)`.
pub fn schur_poly(lambda: &[usize], vars: usize) -> Poly {
    let mut p = Poly::new();
    for e in ssyt_monomials(lambda, vars) {
        add_into(&mut p, e.into_iter().map(|x| x as u8).collect(), BigInt::one());
    }
    p
}

/// `Σ c_λ s_λ(x_1, .., x_vars)`.
pub fn schur_combination(terms: &[(Vec<usize>, BigInt)], vars: usize) -> Poly {
    let mut out = Poly::new();
    for (lam, c) in terms {
        for (e, k) in schur_poly(lam, vars) {
            add_into(&mut out, e, k * c);
        }
    }
    prune(out)
}

/// `s_μ[s_λ]` in `vars` variables: the monomials of `s_λ`, with
/// multiplicity, become the alphabet of `s_μ`.
pub fn plethysm_by_monomials(mu: &[usize], lambda: &[usize], vars: usize) -> Poly {
    let alphabet = ssyt_monomials(lambda, vars);
    let mut out = Poly::new();
    for t in ssyt_monomials(mu, alphabet.len()) {
        let mut e = vec![0u8; vars];
        for (letter, &count) in t.iter().enumerate() {
            for (v, &x) in alphabet[letter].iter().enumerate() {
                e[v] += (x * count) as u8;
            }
        }
        add_into(&mut out, e, BigInt::one());
    }
    prune(out)
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn inverse(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn with_cycle_type(mu: &[usize]) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut start = 0;
    for &k in mu {
        for i in 0..k {
            perm.push(start + (i + 1) % k);
        }
        start += k;
    }
    perm
}

/// Power-sum coefficients `χ(μ)/z_μ` of `Ind_{Z_n}^{S_n}` of the character
/// sending the standard `n`-cycle to `e^{2πik/n}`, summing over all of `S_n`.
pub fn induced_from_cyclic(n: usize, k: usize) -> Vec<(Vec<usize>, BigRational)> {
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut powers = HashMap::new();
    let mut h: Vec<usize> = (0..n).collect();
    for j in 0..n {
        powers.insert(h.clone(), j);
        h = compose(&cycle, &h);
    }
    let group: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let omega = |j: usize| {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k * j) as f64 / n as f64)
    };
    partitions(n)
        .into_iter()
        .map(|mu| {
            let g = with_cycle_type(&mu);
            let mut value = Complex64::new(0.0, 0.0);
            for x in &group {
                let conj = compose(&compose(x, &g), &inverse(x));
                if let Some(&j) = powers.get(&conj) {
                    value += omega(j);
                }
            }
            value /= n as f64;
            assert!(value.im.abs() < 1e-9, "induced character is real");
            let rounded = value.re.round();
            assert!((value.re - rounded).abs() < 1e-9, "induced character is integral");
            let c = BigRational::new(BigInt::from(rounded as i64), z(&mu));
            (mu, c)
        })
        .collect()
}

fn proper_colourings(n: usize, edges: &[(usize, usize)], t: usize) -> u64 {
    if t == 0 {
        return u64::from(n == 0);
    }
    let mut colour = vec![0usize; n];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(a, b)| colour[a] != colour[b]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            colour[i] += 1;
            if colour[i] < t {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
    }
}

/// Lagrange interpolation through `(t, values[t])`.
fn interpolate(values: &[u64]) -> Vec<BigInt> {
    let m = values.len();
    let mut coeffs = vec![BigRational::zero(); m];
    for (i, &y) in values.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in (0..m).filter(|&j| j != i) {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(BigInt::from(j));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(i as i64 - j as i64));
        }
        let scale = BigRational::from_integer(BigInt::from(y)) / denom;
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    let mut out: Vec<BigInt> = coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Chromatic polynomial, ascending in `t`, from colouring counts at
/// `t = 0..=n` and interpolation.
pub fn chromatic_by_colouring(n: usize, edges: &[(usize, usize)]) -> Vec<BigInt> {
    let values: Vec<u64> = (0..=n).map(|t| proper_colourings(n, edges, t)).collect();
    interpolate(&values)
}
