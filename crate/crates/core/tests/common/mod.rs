//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's Smith form, lattice or elimination code.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_chow::cli::InputDocument;
use toric_chow::exactla::{smith_normal_form, FgAbelianGroup, IntMatrix};
use toric_chow::present::Polynomial;
use toric_chow::stacky::StackyFan;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture_doc(name: &str) -> InputDocument {
    InputDocument::from_json(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows(c, &rows).unwrap()
}

/// `U M V = D`, both transforms unimodular, `u_inv` inverts `U`, the diagonal
/// is positive with each entry dividing the next, and nothing sits off it.
pub fn snf_contract_holds(m: &IntMatrix) -> bool {
    let s = smith_normal_form(m);
    let (r, c) = m.shape();
    if s.u.mul(m).unwrap().mul(&s.v).unwrap() != s.d {
        return false;
    }
    if !s.u.is_unimodular() || !s.v.is_unimodular() {
        return false;
    }
    if s.u.mul(&s.u_inv).unwrap() != IntMatrix::identity(r) {
        return false;
    }
    for i in 0..r {
        for j in 0..c {
            let x = &s.d[(i, j)];
            if i != j && !x.is_zero() {
                return false;
            }
            if i == j && i < s.rank() && (x.is_negative() || *x != s.invariant_factors[i]) {
                return false;
            }
            if i == j && i >= s.rank() && !x.is_zero() {
                return false;
            }
        }
    }
    s.invariant_factors
        .windows(2)
        .all(|w| w[1].is_multiple_of(&w[0]))
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Rank over Q by fraction-field Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(rat).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for j in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][j].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][j].clone();
        for i in 0..a.len() {
            if i != rank && !a[i][j].is_zero() {
                let f = &a[i][j] / &pivot;
                let top = a[rank].clone();
                for (x, t) in a[i].iter_mut().zip(&top).skip(j) {
                    *x -= &f * t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `B c = x` for a matrix with linearly independent columns; `None`
/// when `x` is outside the rational column span.
pub fn solve_in_span(basis: &IntMatrix, x: &[BigInt]) -> Option<Vec<BigRational>> {
    let (n, k) = basis.shape();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.row(i).iter().map(rat).collect();
            row.push(rat(&x[i]));
            row
        })
        .collect();
    let mut r = 0;
    for j in 0..k {
        let p = (r..n).find(|&i| !a[i][j].is_zero())?;
        a.swap(r, p);
        let pivot = a[r][j].clone();
        for v in a[r].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..n {
            if i != r && !a[i][j].is_zero() {
                let f = a[i][j].clone();
                let top = a[r].clone();
                for (x, t) in a[i].iter_mut().zip(&top) {
                    *x -= &f * t;
                }
            }
        }
        r += 1;
    }
    if (r..n).any(|i| !a[i][k].is_zero()) {
        return None;
    }
    Some((0..k).map(|j| a[j][k].clone()).collect())
}

/// Every integer point of the box `|x_i| <= bound` in `Z^n`.
pub fn box_points(n: usize, bound: i64) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-bound..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(BigInt::from(x));
                    q
                })
            })
            .collect();
    }
    out
}

fn valuation(x: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    while !x.is_zero() && x.is_multiple_of(&p) {
        x /= &p;
        v += 1;
    }
    v
}

fn rat_valuation(x: &BigRational, p: u64) -> u32 {
    valuation(x.numer(), p)
}

/// Smith form over the local ring `Z_(p)`: the `p`-adic valuations of the
/// nonzero invariant factors, ascending. Works in `Q` with pivots of minimal
/// valuation, so only units of `Z_(p)` are ever divided out.
pub fn local_valuations(rows: &[Vec<BigInt>], p: u64) -> Vec<u32> {
    let mut a: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(rat).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut live_rows: Vec<usize> = (0..a.len()).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    loop {
        let mut best: Option<(usize, usize, u32)> = None;
        for &i in &live_rows {
            for &j in &live_cols {
                if a[i][j].is_zero() {
                    continue;
                }
                let v = rat_valuation(&a[i][j], p);
                if best.is_none_or(|(_, _, b)| v < b) {
                    best = Some((i, j, v));
                }
            }
        }
        let Some((pi, pj, v)) = best else { break };
        out.push(v);
        let pivot = a[pi][pj].clone();
        for &i in &live_rows {
            if i == pi || a[i][pj].is_zero() {
                continue;
            }
            let f = &a[i][pj] / &pivot;
            for &j in &live_cols {
                let t = &f * &a[pi][j];
                a[i][j] -= t;
            }
        }
        live_rows.retain(|&i| i != pi);
        live_cols.retain(|&j| j != pj);
    }
    out.sort_unstable();
    out
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0))
        .collect()
}

/// Prime divisors by trial division; fine for the small groups in the tests.
pub fn prime_divisors(x: &BigInt) -> Vec<u64> {
    let mut x = x.abs().to_u64().expect("small torsion");
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Does `g` agree with `Z^rank` plus the local data of the relation rows at
/// every prime `<= 100` and every prime dividing a torsion factor of `g`?
pub fn group_matches_oracle(g: &FgAbelianGroup, rows: &[Vec<BigInt>], ncols: usize) -> bool {
    if g.rank() != ncols - rational_rank(rows) {
        return false;
    }
    let mut primes = primes_up_to(100);
    for a in g.torsion() {
        primes.extend(prime_divisors(a));
    }
    primes.sort_unstable();
    primes.dedup();
    primes.iter().all(|&p| {
        let mut ours: Vec<u32> = g
            .torsion()
            .iter()
            .map(|a| valuation(a, p))
            .filter(|&v| v > 0)
            .collect();
        ours.sort_unstable();
        let theirs: Vec<u32> = local_valuations(rows, p)
            .into_iter()
            .filter(|&v| v > 0)
            .collect();
        ours == theirs
    })
}

/// Exponent vectors of total degree `deg` in `n` variables, any order.
pub fn exponent_vectors(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=deg)
        .flat_map(|first| {
            exponent_vectors(n - 1, deg - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// A homogeneous relation as `(exponents, coefficient)` pairs.
pub type Sparse = Vec<(Vec<u32>, i64)>;

pub fn sparse_to_polynomial(n: usize, rel: &Sparse) -> Polynomial {
    rel.iter().fold(Polynomial::zero(n), |acc, (e, c)| {
        acc.add(&Polynomial::term(
            n,
            toric_chow::present::Monomial::new(e.clone()),
            *c,
        ))
        .unwrap()
    })
}

/// Relation matrix of the degree-`k` piece, built from scratch.
pub fn degree_rows(n: usize, rels: &[Sparse], k: u32) -> (Vec<Vec<BigInt>>, usize) {
    let basis = exponent_vectors(n, k);
    let index: HashMap<Vec<u32>, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut rows = Vec::new();
    for rel in rels {
        let Some(e) = rel.first().map(|(m, _)| m.iter().sum::<u32>()) else {
            continue;
        };
        if e > k {
            continue;
        }
        for shift in exponent_vectors(n, k - e) {
            let mut row = vec![BigInt::zero(); basis.len()];
            for (m, c) in rel {
                let target: Vec<u32> = m.iter().zip(&shift).map(|(a, b)| a + b).collect();
                row[index[&target]] += *c;
            }
            rows.push(row);
        }
    }
    (rows, basis.len())
}

pub fn evaluate(p: &Polynomial, point: &[i64]) -> BigInt {
    p.terms()
        .map(|(m, c)| {
            m.exponents()
                .iter()
                .zip(point)
                .fold(c.clone(), |acc, (&e, &x)| acc * BigInt::from(x).pow(e))
        })
        .sum()
}

/// Subsets of `0..n` that lie in no listed cone but whose proper subsets all
/// do, by exhaustive search over all `2^n` subsets.
pub fn brute_minimal_nonfaces(n: usize, cones: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let masks: Vec<u64> = cones
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect();
    let is_face = |s: u64| masks.iter().any(|&m| s & m == s);
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|&s| {
            !is_face(s)
                && (0..n)
                    .filter(|i| s >> i & 1 == 1)
                    .all(|i| is_face(s & !(1 << i)))
        })
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Cone generators extend to a lattice basis iff their maximal minors have
/// gcd 1.
pub fn brute_cone_is_smooth(rays: &[Vec<BigInt>], cone: &[usize], dim: usize) -> bool {
    let k = cone.len();
    if k == 0 {
        return true;
    }
    let mut g = BigInt::zero();
    for cols in subsets(dim, k) {
        let sub: Vec<Vec<BigInt>> = cone
            .iter()
            .map(|&i| cols.iter().map(|&j| rays[i][j].clone()).collect())
            .collect();
        g = g.gcd(&leibniz_det(&sub));
    }
    g.is_one()
}

fn leibniz_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * leibniz_det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Adds random multiples of `a_j` to every entry of the torsion rows.
pub fn perturb_torsion_rows(sf: &StackyFan, rng: &mut ChaCha8Rng, spread: i64) -> StackyFan {
    let d = sf.target().rank();
    let torsion = sf.target().torsion().to_vec();
    let mut rows = sf.lift().to_rows();
    for (j, a) in torsion.iter().enumerate() {
        for x in rows[d + j].iter_mut() {
            *x += a * BigInt::from(rng.gen_range(-spread..=spread));
        }
    }
    let lift = IntMatrix::from_rows(sf.lift().cols(), &rows).unwrap();
    StackyFan::new(sf.fan().clone(), d, torsion, lift).unwrap()
}
