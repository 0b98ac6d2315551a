//! Reduction of cyclotomic integers modulo a fixed maximal ideal over `p`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::chartab::modp::PrimeField;
use crate::chartab::Cyclotomic;
use crate::grp::{prime_factors, split_p_part};

/// `F_{p^k}` as `F_p[x]/(f)` with `f` the least monic irreducible polynomial
/// of degree `k`, ordering polynomials by the integer `Σ c_i p^i` of their
/// lower coefficients. Elements are coefficient vectors of length `k`.
#[derive(Clone, Debug)]
pub struct ExtField {
    base: PrimeField,
    degree: usize,
    modulus: Vec<u64>,
}

pub type ExtElem = Vec<u64>;

impl ExtField {
    pub fn new(p: u64, degree: usize) -> Self {
        assert!(degree >= 1);
        let base = PrimeField::new(p);
        let modulus = (0u64..)
            .map(|n| {
                let mut f = digits(n, p, degree);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(base, f))
            .expect("irreducible polynomials exist in every degree");
        ExtField {
            base,
            degree,
            modulus,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.base.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn size(&self) -> u64 {
        self.base.p.pow(self.degree as u32)
    }

    /// The element whose coefficients are the base-`p` digits of `n`.
    pub fn element(&self, n: u64) -> ExtElem {
        digits(n, self.base.p, self.degree)
    }

    pub fn one(&self) -> ExtElem {
        self.element(1)
    }

    pub fn zero(&self) -> ExtElem {
        vec![0; self.degree]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect()
    }

    pub fn scale(&self, a: &[u64], c: u64) -> ExtElem {
        a.iter().map(|&x| self.base.mul(x, c)).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> ExtElem {
        let mut r = self.base.poly_mulmod(a, b, &self.modulus);
        r.resize(self.degree, 0);
        r
    }

    pub fn pow(&self, a: &[u64], mut e: u64) -> ExtElem {
        let mut acc = self.one();
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: &[u64]) -> u64 {
        let q1 = self.size() - 1;
        let one = self.one();
        let mut ord = q1;
        for r in prime_factors(q1) {
            while ord % r == 0 && self.pow(a, ord / r) == one {
                ord /= r;
            }
        }
        ord
    }
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Ben-Or: a monic `f` of degree `k` is irreducible iff
/// `gcd(f, x^{p^i} - x) = 1` for `1 ≤ i ≤ k/2`.
fn is_irreducible(field: PrimeField, f: &[u64]) -> bool {
    let k = f.len() - 1;
    let mut xp = vec![0, 1];
    for _ in 0..k / 2 {
        xp = field.poly_powmod(&xp, field.p, f);
        let g = field.poly_gcd(f, &field.poly_sub(&xp, &[0, 1]));
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Ring homomorphism `Z[ζ_m] → F_{p^k}`.
///
/// With `m = p^a·m'` and `p ∤ m'`, `k` is the order of `p` modulo `m'` and
/// `ζ_m` goes to a primitive `m'`-th root of unity `θ`. By default `θ` is the
/// least such root in the element ordering of [`ExtField`]; `with_root_power`
/// replaces it by `θ^r`, which selects a different maximal ideal over `p`.
#[derive(Clone, Debug)]
pub struct ResidueEmbedding {
    conductor: u32,
    p: u64,
    field: Arc<ExtField>,
    root_order: u64,
    root_powers: Vec<ExtElem>,
}

impl ResidueEmbedding {
    pub fn new(conductor: u32, p: u64) -> Self {
        let (_, m_prime) = split_p_part(conductor as u64, p);
        let k = multiplicative_order(p, m_prime);
        let field = shared_field(p, k);
        let one = field.one();
        let theta = (1..field.size())
            .map(|n| field.element(n))
            .find(|x| field.pow(x, m_prime) == one && field.order(x) == m_prime)
            .expect("F_{p^k} contains primitive m'-th roots when p^k ≡ 1 mod m'");
        let root_powers = successive_powers(&field, &theta, m_prime);
        ResidueEmbedding {
            conductor,
            p,
            field,
            root_order: m_prime,
            root_powers,
        }
    }

    /// Same field, with `θ` replaced by `θ^r` (`r` prime to `m'`).
    pub fn with_root_power(&self, r: u64) -> Self {
        assert_eq!(
            gcd(r, self.root_order),
            1,
            "exponent must be prime to the root order"
        );
        let theta = self.root_powers[(r % self.root_order) as usize].clone();
        ResidueEmbedding {
            root_powers: successive_powers(&self.field, &theta, self.root_order),
            ..self.clone()
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    /// Order `m'` of the image of `ζ_m`.
    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn root(&self) -> &ExtElem {
        &self.root_powers[1 % self.root_powers.len()]
    }

    /// Image of a value whose conductor divides this embedding's conductor.
    pub fn map(&self, x: &Cyclotomic) -> ExtElem {
        let c = x.conductor();
        assert!(
            self.conductor % c == 0,
            "conductor {c} does not divide {}",
            self.conductor
        );
        let step = (self.conductor / c) as u64;
        let mut acc = self.field.zero();
        for (j, &a) in x.coeffs().iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a = a.rem_euclid(self.p as i64) as u64;
            let pw = &self.root_powers[((j as u64 * step) % self.root_order) as usize];
            acc = self.field.add(&acc, &self.field.scale(pw, a));
        }
        acc
    }
}

fn successive_powers(field: &ExtField, theta: &[u64], n: u64) -> Vec<ExtElem> {
    let mut out = Vec::with_capacity(n as usize);
    let mut acc = field.one();
    for _ in 0..n {
        out.push(acc.clone());
        acc = field.mul(&acc, theta);
    }
    out
}

type FieldCache = HashMap<(u64, usize), Arc<ExtField>>;

fn shared_field(p: u64, k: usize) -> Arc<ExtField> {
    static CACHE: OnceLock<Mutex<FieldCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&(p, k)) {
        return f.clone();
    }
    let f = Arc::new(ExtField::new(p, k));
    cache.lock().unwrap().insert((p, k), f.clone());
    f
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Order of `a` in `(Z/m)^×`; 1 when `m = 1`.
fn multiplicative_order(a: u64, m: u64) -> usize {
    if m == 1 {
        return 1;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    k
}

/// The embedding used for block computations over a table of the given exponent.
pub fn residue_embedding(conductor: u32, p: u64) -> ResidueEmbedding {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u64), ResidueEmbedding>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(e) = cache.lock().unwrap().get(&(conductor, p)) {
        return e.clone();
    }
    let e = ResidueEmbedding::new(conductor, p);
    cache.lock().unwrap().insert((conductor, p), e.clone());
    e
}
