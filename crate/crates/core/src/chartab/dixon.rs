//! Dixon–Schneider: common eigenvectors of the class matrices over a prime
//! field `F_ℓ` with `ℓ ≡ 1 (mod exponent)`, then exact lifting of the
//! reduced character values.

use super::modp::PrimeField;
use super::{ChartabError, Cyclotomic};
use crate::grp::{is_prime, ConjClassSet, Group};

/// Class multiplication coefficients `a[i][j][k]`: the number of pairs
/// `(x, y) ∈ K_i × K_j` with `x·y` equal to the representative of `K_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCoefficients {
    k: usize,
    data: Vec<u64>,
}

impl ClassCoefficients {
    pub fn classes(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.k + j) * self.k + k]
    }
}

fn count_pairs_into(
    group: &Group,
    classes: &ConjClassSet,
    z: &crate::grp::Perm,
    k: usize,
    out: &mut [u64],
    target: usize,
) {
    for (xi, x) in group.elements().iter().enumerate() {
        let y = x.inverse().mul(z);
        let yi = group.index_of(&y).expect("closed");
        let i = classes.class_of_index(xi);
        let j = classes.class_of_index(yi);
        out[(i * k + j) * k + target] += 1;
    }
}

pub fn class_mult_coeffs(group: &Group, classes: &ConjClassSet) -> ClassCoefficients {
    let k = classes.len();
    let mut data = vec![0u64; k * k * k];
    for (t, z) in classes.reps().iter().enumerate() {
        count_pairs_into(group, classes, z, k, &mut data, t);
    }
    ClassCoefficients { k, data }
}

/// Recounts the coefficients against every member of each target class and
/// reports whether the counts agree with those taken at the representatives.
pub fn coefficients_are_class_functions(
    group: &Group,
    classes: &ConjClassSet,
    coeffs: &ClassCoefficients,
) -> bool {
    let k = classes.len();
    for (zi, z) in group.elements().iter().enumerate() {
        let t = classes.class_of_index(zi);
        let mut local = vec![0u64; k * k * k];
        count_pairs_into(group, classes, z, k, &mut local, t);
        for i in 0..k {
            for j in 0..k {
                if local[(i * k + j) * k + t] != coeffs.get(i, j, t) {
                    return false;
                }
            }
        }
    }
    true
}

/// Smallest prime `ℓ ≡ 1 (mod exponent)` with `ℓ > 2·√order`.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    next_dixon_prime(order, exponent, 0)
}

/// Smallest prime `ℓ ≡ 1 (mod exponent)` with `ℓ > 2·√order` and `ℓ > after`.
pub fn next_dixon_prime(order: u64, exponent: u64, after: u64) -> u64 {
    let mut t = 1u64;
    loop {
        let l = 1 + exponent * t;
        if l > after && l * l > 4 * order && is_prime(l) {
            return l;
        }
        t += 1;
    }
}

/// Normalized central characters `ω_χ` mod `ℓ` (with `ω_χ(K_0) = 1`), one per
/// irreducible character, in the order the splitting produced them.
pub(crate) fn central_characters_mod(
    coeffs: &ClassCoefficients,
    field: PrimeField,
) -> Result<Vec<Vec<u64>>, ChartabError> {
    let k = coeffs.classes();
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];

    // M_j[i][t] = a[i][j][t]; ω is a right eigenvector of M_j with eigenvalue ω(K_j)
    for j in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_space(coeffs, j, field, basis)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) || spaces.len() != k {
        return Err(ChartabError::SplitFailure);
    }
    spaces
        .into_iter()
        .map(|mut s| {
            let v = s.pop().unwrap();
            if v[0] == 0 {
                return Err(ChartabError::SplitFailure);
            }
            let inv = field.inv(v[0]);
            Ok(v.iter().map(|&x| field.mul(x, inv)).collect())
        })
        .collect()
}

/// Splits an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of class matrix `j`.
fn split_space(
    coeffs: &ClassCoefficients,
    j: usize,
    field: PrimeField,
    basis: Vec<Vec<u64>>,
) -> Result<Vec<Vec<Vec<u64>>>, ChartabError> {
    let k = coeffs.classes();
    let d = basis.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();
    // image of each basis vector under M_j, in basis coordinates (read off at pivots)
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|v| {
            (0..k)
                .map(|i| {
                    (0..k).fold(0, |acc, t| {
                        field.add(
                            acc,
                            field.mul(field.from_i64(coeffs.get(i, j, t) as i64), v[t]),
                        )
                    })
                })
                .collect()
        })
        .collect();
    // restricted[r][c]: coordinate r of M_j(basis_c)
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|r| (0..d).map(|c| images[c][pivots[r]]).collect())
        .collect();
    let eigenvalues = field.roots(&field.charpoly(&restricted));
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        let x = restricted[r][c];
                        if r == c {
                            field.sub(x, lambda)
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        let coords = field.nullspace(shifted, d);
        let mut vecs: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..k)
                    .map(|t| (0..d).fold(0, |acc, b| field.add(acc, field.mul(c[b], basis[b][t]))))
                    .collect()
            })
            .collect();
        field.rref(&mut vecs);
        total += vecs.len();
        out.push(vecs);
    }
    if total != d {
        return Err(ChartabError::SplitFailure);
    }
    Ok(out)
}

/// Recovers the degree and exact values of the character with central
/// character `omega` (mod `ℓ`).
pub(crate) fn lift_character(
    omega: &[u64],
    classes: &ConjClassSet,
    field: PrimeField,
    root: u64,
) -> Result<(u64, Vec<Cyclotomic>), ChartabError> {
    let order = classes.group_order();
    let k = classes.len();
    // Σ_i ω_i ω_{i*} / |K_i| = |G| / χ(1)²
    let mut s = 0u64;
    for i in 0..k {
        let term = field.mul(omega[i], omega[classes.inverse_class(i)]);
        s = field.add(s, field.mul(term, field.inv(classes.sizes()[i] % field.p)));
    }
    let deg_sq = field.mul(order % field.p, field.inv(s));
    let degree = (1..)
        .take_while(|d: &u64| d * d <= order)
        .find(|d| (d * d) % field.p == deg_sq)
        .ok_or(ChartabError::LiftFailure)?;

    let values_mod: Vec<u64> = (0..k)
        .map(|i| {
            let num = field.mul(degree % field.p, omega[i]);
            field.mul(num, field.inv(classes.sizes()[i] % field.p))
        })
        .collect();

    let mut values = Vec::with_capacity(k);
    for i in 0..k {
        let o = classes.orders()[i];
        let zeta = field.pow(root, (field.p - 1) / o);
        let zeta_inv = field.inv(zeta);
        let o_inv = field.inv(o % field.p);
        let mut mults = Vec::with_capacity(o as usize);
        for e in 0..o {
            // multiplicity of ζ^e as an eigenvalue: (1/o) Σ_j χ(g^j) ζ^{-je}
            let step = field.pow(zeta_inv, e);
            let mut acc = 0;
            let mut w = 1;
            for jj in 0..o {
                let v = values_mod[classes.power(i, jj as i64)];
                acc = field.add(acc, field.mul(v, w));
                w = field.mul(w, step);
            }
            let m = field.mul(acc, o_inv);
            if m > degree {
                return Err(ChartabError::LiftFailure);
            }
            mults.push(m as i64);
        }
        if mults.iter().sum::<i64>() != degree as i64 {
            return Err(ChartabError::LiftFailure);
        }
        values.push(Cyclotomic::from_exponents(o as u32, &mults));
    }
    Ok((degree, values))
}
