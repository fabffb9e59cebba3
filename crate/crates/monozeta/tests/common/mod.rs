//! Shared helpers for the integration suites: seeded random generators for
//! points, polytopes, and polynomials, plus exact reference oracles that
//! recompute volumes and mixed volumes with none of the library's hull or
//! face machinery. Oracles work in plain i64 (inputs are kept small enough
//! that the largest determinant is far below overflow).

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use monozeta::exactlat::{convex_hull, LatticePoint, Polytope};
use monozeta::polyio::{parse_polynomial, Polynomial};
use monozeta::zetacore::ZetaFunction;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn zeta(pairs: &[(u64, i64)]) -> ZetaFunction {
    let mut z = ZetaFunction::one();
    for &(d, e) in pairs {
        z.mul_factor(d, BigInt::from(e));
    }
    z
}

// ---------------------------------------------------------------- points

pub fn polytope(rows: &[Vec<i64>], ambient: usize) -> Polytope {
    let pts: Vec<LatticePoint> = rows.iter().map(|r| LatticePoint::from_i64s(r)).collect();
    convex_hull(&pts, ambient).expect("test polytope")
}

pub fn vertex_rows(p: &Polytope) -> Vec<Vec<i64>> {
    p.vertices()
        .iter()
        .map(|v| v.0.iter().map(|c| i64::try_from(c).expect("small coordinate")).collect())
        .collect()
}

pub fn random_points(rng: &mut ChaCha8Rng, n: usize, count: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..count)
        .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect()
}

/// Random GL_n(Z) element: a few shears composed with a signed permutation.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        if n > 1 {
            while j == i {
                j = rng.gen_range(0..n);
            }
            let s: i64 = if rng.gen() { 1 } else { -1 };
            for col in 0..n {
                m[i][col] += s * m[j][col];
            }
        }
    }
    if rng.gen() && n > 1 {
        m.swap(0, 1);
    }
    let flip = rng.gen_range(0..n);
    for col in 0..n {
        m[flip][col] = -m[flip][col];
    }
    m
}

pub fn apply_matrix(m: &[Vec<i64>], points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    points
        .iter()
        .map(|p| m.iter().map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum()).collect())
        .collect()
}

// ------------------------------------------------------------ polynomials

pub fn var_names(n: usize) -> Vec<String> {
    ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
}

fn monomial_text(vars: &[String], coeff: i64, exp: &[u64]) -> String {
    let mut parts = vec![coeff.to_string()];
    for (name, &e) in vars.iter().zip(exp) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Random polynomial with positive coefficients (so no term cancels), at
/// least one non-constant term, optionally forced convenient by adding a
/// pure power of every variable, optionally with a constant term.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_exp: u64,
    max_terms: usize,
    force_convenient: bool,
    constant: Option<i64>,
) -> Polynomial {
    let vars = var_names(n);
    let mut monomials: Vec<String> = Vec::new();
    let terms = rng.gen_range(1..=max_terms);
    let mut saw_nonconstant = false;
    for _ in 0..terms {
        let exp: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exp.iter().any(|&e| e > 0) {
            saw_nonconstant = true;
            monomials.push(monomial_text(&vars, rng.gen_range(1..=4), &exp));
        }
    }
    if force_convenient {
        for i in 0..n {
            let mut exp = vec![0u64; n];
            exp[i] = rng.gen_range(1..=max_exp);
            monomials.push(monomial_text(&vars, rng.gen_range(1..=4), &exp));
            saw_nonconstant = true;
        }
    }
    if !saw_nonconstant {
        let mut exp = vec![0u64; n];
        exp[rng.gen_range(0..n)] = rng.gen_range(1..=max_exp);
        monomials.push(monomial_text(&vars, rng.gen_range(1..=4), &exp));
    }
    if let Some(a) = constant {
        if a != 0 {
            monomials.push(a.to_string());
        }
    }
    parse_polynomial(&monomials.join(" + "), &vars).expect("generated text parses")
}

// ------------------------------------------------------- volume oracle

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn dot(u: &[i64], p: &[i64]) -> i64 {
    u.iter().zip(p).map(|(a, b)| a * b).sum()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn det2(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn cross(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Facet inequalities <u,x> <= c of conv(points) found by brute force over
/// all spanning subsets of size d, reduced to primitive form and deduped.
pub fn brute_facets(pts: &[Vec<i64>], d: usize) -> Vec<(Vec<i64>, i64)> {
    let m = pts.len();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    match d {
        1 => subsets.extend((0..m).map(|i| vec![i])),
        2 => {
            for i in 0..m {
                for j in i + 1..m {
                    subsets.push(vec![i, j]);
                }
            }
        }
        3 => {
            for i in 0..m {
                for j in i + 1..m {
                    for k in j + 1..m {
                        subsets.push(vec![i, j, k]);
                    }
                }
            }
        }
        _ => panic!("oracle handles dimensions 1..3"),
    }
    let mut out: Vec<(Vec<i64>, i64)> = Vec::new();
    for chosen in subsets {
        let base = &pts[chosen[0]];
        let u = match d {
            1 => vec![1],
            2 => {
                let dir = sub(&pts[chosen[1]], base);
                vec![dir[1], -dir[0]]
            }
            _ => cross(&sub(&pts[chosen[1]], base), &sub(&pts[chosen[2]], base)),
        };
        if u.iter().all(|&x| x == 0) {
            continue;
        }
        let c = dot(&u, base);
        let (mut any_above, mut any_below) = (false, false);
        for q in pts {
            match dot(&u, q).cmp(&c) {
                std::cmp::Ordering::Greater => any_above = true,
                std::cmp::Ordering::Less => any_below = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        let keep = |mut u: Vec<i64>, mut c: i64, out: &mut Vec<(Vec<i64>, i64)>| {
            let g = u.iter().fold(0, |acc, &x| gcd(acc, x));
            if g > 1 {
                u.iter_mut().for_each(|x| *x /= g);
                c /= g;
            }
            let key = (u, c);
            if !out.contains(&key) {
                out.push(key);
            }
        };
        if !any_above {
            keep(u.clone(), c, &mut out);
        }
        if !any_below {
            keep(u.iter().map(|x| -x).collect(), -c, &mut out);
        }
    }
    out
}

/// Cyclic convex hull of 2d points by gift wrapping; collinear points are
/// skipped by always advancing to the farthest point on the supporting line.
fn jarvis(pts: &[(i64, i64)]) -> Vec<usize> {
    let start = (0..pts.len()).min_by_key(|&i| pts[i]).unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut next = (cur + 1) % pts.len();
        if next == cur {
            break;
        }
        for cand in 0..pts.len() {
            if cand == cur {
                continue;
            }
            let a = (pts[next].0 - pts[cur].0, pts[next].1 - pts[cur].1);
            let b = (pts[cand].0 - pts[cur].0, pts[cand].1 - pts[cur].1);
            let turn = a.0 * b.1 - a.1 * b.0;
            let farther = b.0 * b.0 + b.1 * b.1 > a.0 * a.0 + a.1 * a.1;
            if turn < 0 || (turn == 0 && farther) {
                next = cand;
            }
        }
        if next == start {
            break;
        }
        hull.push(next);
        cur = next;
    }
    hull
}

/// Normalized volume d!*vol of conv(points) in its ambient dimension d
/// (1..3), by triangulating the far boundary into simplices coned to the
/// lexicographically least point: independent of the library hull code.
/// Degenerate inputs give 0.
pub fn vol_oracle(points: &[Vec<i64>]) -> i64 {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let d = pts[0].len();
    if pts.len() < 2 {
        return 0;
    }
    let v0 = pts[0].clone();
    let mut total: i64 = 0;
    for (u, c) in brute_facets(&pts, d) {
        if dot(&u, &v0) == c {
            continue;
        }
        let on_facet: Vec<&Vec<i64>> = pts.iter().filter(|q| dot(&u, q) == c).collect();
        match d {
            1 => total += (on_facet[0][0] - v0[0]).abs(),
            2 => {
                let a = on_facet.iter().min().unwrap();
                let b = on_facet.iter().max().unwrap();
                total += det2(&sub(a, &v0), &sub(b, &v0)).abs();
            }
            3 => {
                let drop = (0..3).max_by_key(|&i| u[i].abs()).unwrap();
                let flat: Vec<(i64, i64)> = on_facet
                    .iter()
                    .map(|q| {
                        let kept: Vec<i64> =
                            (0..3).filter(|&i| i != drop).map(|i| q[i]).collect();
                        (kept[0], kept[1])
                    })
                    .collect();
                let ring = jarvis(&flat);
                for w in 1..ring.len().saturating_sub(1) {
                    total += det3(
                        &sub(on_facet[ring[0]], &v0),
                        &sub(on_facet[ring[w]], &v0),
                        &sub(on_facet[ring[w + 1]], &v0),
                    )
                    .abs();
                }
            }
            _ => unreachable!(),
        }
    }
    total
}

/// Lattice points of conv(points) dilated by k, counted through the brute
/// facet inequalities.
pub fn lattice_point_count(points: &[Vec<i64>], k: i64) -> i64 {
    let d = points[0].len();
    if k == 0 {
        return 1;
    }
    let facets = brute_facets(points, d);
    let lo: Vec<i64> = (0..d).map(|i| k * points.iter().map(|p| p[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|i| k * points.iter().map(|p| p[i]).max().unwrap()).collect();
    let mut count = 0;
    let mut q = lo.clone();
    'outer: loop {
        if facets.iter().all(|(u, c)| dot(u, &q) <= k * c) {
            count += 1;
        }
        for i in 0..d {
            q[i] += 1;
            if q[i] <= hi[i] {
                continue 'outer;
            }
            q[i] = lo[i];
        }
        break;
    }
    count
}

// --------------------------------------------------- mixed volume oracle

fn multi_indices(vars: usize, degree: u64) -> Vec<Vec<u64>> {
    if vars == 1 {
        return vec![vec![degree]];
    }
    let mut out = Vec::new();
    for first in 0..=degree {
        for mut rest in multi_indices(vars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Unique exact solution of an overdetermined consistent linear system by
/// Gaussian elimination over the rationals; panics if the system is rank
/// deficient or inconsistent.
fn solve_exact(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Vec<BigRational> {
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(best) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            panic!("interpolation system is rank deficient at column {col}");
        };
        rows.swap(pivot_row, best);
        let inv = rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x /= &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot = rows[pivot_row].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    for r in pivot_row..rows.len() {
        assert!(rows[r][unknowns].is_zero(), "interpolation system is inconsistent");
    }
    (0..unknowns).map(|c| rows[pivots[c]][unknowns].clone()).collect()
}

/// Mixed volume of n bodies in R^n (n = 2 or 3) by polynomial
/// interpolation: the normalized volume of the dilated Minkowski sum
/// lambda_1 P_1 + ... + lambda_n P_n is a homogeneous degree-n polynomial
/// whose lambda_1...lambda_n coefficient is n! times the mixed volume.
/// Volumes come from `vol_oracle`; nothing is shared with the library.
pub fn mv_oracle(bodies: &[&[Vec<i64>]]) -> i64 {
    let n = bodies.len();
    assert!(n == 2 || n == 3, "oracle handles 2 or 3 bodies");
    assert!(bodies.iter().all(|b| b[0].len() == n));
    let alphas = multi_indices(n, n as u64);
    let mut rows = Vec::new();
    for node in &alphas {
        // evaluate at lambda = node; the simplex lattice is poised for
        // homogeneous interpolation of this degree
        let mut sum_points = vec![vec![0i64; n]];
        for (body, &lambda) in bodies.iter().zip(node) {
            let mut next = Vec::new();
            for base in &sum_points {
                if lambda == 0 {
                    next.push(base.clone());
                    continue;
                }
                for p in body.iter() {
                    next.push(
                        base.iter().zip(p).map(|(s, x)| s + lambda as i64 * x).collect(),
                    );
                }
            }
            next.sort();
            next.dedup();
            sum_points = next;
        }
        let w = vol_oracle(&sum_points);
        let mut row: Vec<BigRational> = alphas
            .iter()
            .map(|alpha| {
                let v: i64 = node
                    .iter()
                    .zip(alpha)
                    .map(|(&l, &a)| (l as i64).pow(a as u32))
                    .product();
                BigRational::from_integer(BigInt::from(v))
            })
            .collect();
        row.push(BigRational::from_integer(BigInt::from(w)));
        rows.push(row);
    }
    let coeffs = solve_exact(rows, alphas.len());
    let ones = alphas.iter().position(|a| a.iter().all(|&x| x == 1)).unwrap();
    let c = &coeffs[ones] / BigRational::from_integer(BigInt::from((1..=n as i64).product::<i64>()));
    assert!(c.is_integer(), "mixed volume interpolation must be integral");
    let v = c.to_integer();
    assert!(!v.is_negative(), "mixed volumes are nonnegative");
    i64::try_from(&v).expect("small mixed volume")
}
