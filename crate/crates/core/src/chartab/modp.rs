//! Arithmetic, linear algebra and polynomial root finding over a prime field.

use crate::grp::prime_factors;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn pow(self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .expect("prime fields have primitive roots")
    }

    /// Reduces the rows in place to reduced row echelon form and returns the
    /// pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..ncols {
                        let v = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{x : A x = 0}` for an `m × n` matrix given by rows.
    pub fn nullspace(self, mut a: Vec<Vec<u64>>, n: usize) -> Vec<Vec<u64>> {
        let pivots = self.rref(&mut a);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (row, &pc) in a.iter().zip(&pivots) {
                    v[pc] = self.neg(row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)`, low degree first, via reduction
    /// to upper Hessenberg form.
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m + 1..n)
                .find(|&i| h[i][m - 1] != 0)
                .or_else(|| (h[m][m - 1] != 0).then_some(m))
            else {
                continue;
            };
            if h[m][m - 1] == 0 {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let t = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], t);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], v);
                }
                for row in h.iter_mut() {
                    let v = self.mul(u, row[i]);
                    row[m] = self.add(row[m], v);
                }
            }
        }
        // p_k(x) = (x - h_kk) p_{k-1}(x) - Σ h_{ik} (Π subdiag) p_{i-1}(x)
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[k][k], c));
            }
            let mut t = 1u64;
            for i in (0..k).rev() {
                t = self.mul(t, h[i + 1][i]);
                let coef = self.mul(t, h[i][k]);
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    fn trim(self, mut f: Vec<u64>) -> Vec<u64> {
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        f
    }

    pub(crate) fn poly_rem(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let b = self.trim(b.to_vec());
        let mut r = self.trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = self.inv(b[db]);
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let c = self.mul(r[dr], lead_inv);
            for (j, &bj) in b.iter().enumerate() {
                let v = self.mul(c, bj);
                r[dr - db + j] = self.sub(r[dr - db + j], v);
            }
            r = self.trim(r);
            if dr == 0 {
                break;
            }
        }
        r
    }

    pub(crate) fn poly_mulmod(self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = self.add(prod[i + j], self.mul(x, y));
            }
        }
        self.poly_rem(&prod, m)
    }

    pub(crate) fn poly_powmod(self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mulmod(&acc, &b, m);
            }
            b = self.poly_mulmod(&b, &b, m);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn poly_gcd(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !(b.len() == 1 && b[0] == 0) {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        let inv = self.inv(*a.last().unwrap());
        a.iter().map(|&c| self.mul(c, inv)).collect()
    }

    pub(crate) fn poly_sub(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                self.sub(
                    a.get(i).copied().unwrap_or(0),
                    b.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        self.trim(out)
    }

    fn poly_divexact(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let b = self.trim(b.to_vec());
        let db = b.len() - 1;
        let mut r = self.trim(a.to_vec());
        let mut q = vec![0u64; r.len().saturating_sub(db).max(1)];
        let lead_inv = self.inv(b[db]);
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let c = self.mul(r[dr], lead_inv);
            q[dr - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                let v = self.mul(c, bj);
                r[dr - db + j] = self.sub(r[dr - db + j], v);
            }
            r = self.trim(r);
            if dr == 0 {
                break;
            }
        }
        self.trim(q)
    }

    /// Distinct roots in `F_p` of a nonzero polynomial, in increasing order.
    pub fn roots(self, f: &[u64]) -> Vec<u64> {
        let f = self.trim(f.to_vec());
        if f.len() <= 1 {
            return Vec::new();
        }
        if self.p <= 3 {
            return (0..self.p).filter(|&x| self.eval(&f, x) == 0).collect();
        }
        // product of the distinct linear factors: gcd(f, x^p - x)
        let xp = self.poly_powmod(&[0, 1], self.p, &f);
        let split = self.poly_gcd(&f, &self.poly_sub(&xp, &[0, 1]));
        let mut out = Vec::new();
        self.split_linear(split, 0, &mut out);
        out.sort_unstable();
        out
    }

    /// Splits a monic product of distinct linear factors by
    /// gcd(g, (x + a)^((p-1)/2) - 1) for a = shift, shift + 1, …
    fn split_linear(self, g: Vec<u64>, shift: u64, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => {}
            2 => out.push(self.neg(g[0])),
            _ => {
                let mut a = shift;
                loop {
                    let h = self.poly_powmod(&[a % self.p, 1], (self.p - 1) / 2, &g);
                    let d = self.poly_gcd(&g, &self.poly_sub(&h, &[1]));
                    if d.len() > 1 && d.len() < g.len() {
                        let rest = self.poly_divexact(&g, &d);
                        self.split_linear(d, a + 1, out);
                        self.split_linear(rest, a + 1, out);
                        return;
                    }
                    a += 1;
                }
            }
        }
    }

    pub fn eval(self, f: &[u64], x: u64) -> u64 {
        f.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}
