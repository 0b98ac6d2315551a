//! Concrete permutation groups used throughout the corpus.

use super::{Group, GroupError, IsoType, Perm};

fn cycle_perm(degree: usize, cycle: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[cycle]).expect("valid cycle")
}

fn build(degree: usize, gens: Vec<Perm>) -> Group {
    Group::generate(degree, gens).expect("builtin group is small")
}

pub fn symmetric(n: usize) -> Group {
    let degree = n.max(1);
    if n < 2 {
        return Group::trivial(degree);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    build(degree, vec![cycle_perm(n, &[0, 1]), cycle_perm(n, &all)])
}

pub fn alternating(n: usize) -> Group {
    let degree = n.max(1);
    let gens = (2..n as u32).map(|i| cycle_perm(n, &[0, 1, i])).collect();
    build(degree, gens)
}

pub fn cyclic(n: usize) -> Group {
    let degree = n.max(1);
    if n < 2 {
        return Group::trivial(degree);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    build(n, vec![cycle_perm(n, &all)])
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Group {
    let rot: Vec<u32> = (0..n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    build(
        n,
        vec![
            cycle_perm(n, &rot),
            Perm::from_images(refl).expect("reflection"),
        ],
    )
}

fn reduce(x: i64, m: i64) -> i64 {
    x.rem_euclid(m)
}

fn det2(m: &[Vec<i64>], p: i64) -> i64 {
    reduce(m[0][0] * m[1][1] - m[0][1] * m[1][0], p)
}

fn check_square(m: &[Vec<i64>], n: usize) -> Result<(), GroupError> {
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(GroupError::BadAction(format!(
            "expected {n}x{n} matrix, got {m:?}"
        )));
    }
    Ok(())
}

/// Action of 2x2 matrices over `F_p` on the `p² - 1` nonzero column vectors.
///
/// Vector `(a, b)` is point `a + p·b - 1`.
pub fn linear_action(p: u64, mats: &[Vec<Vec<i64>>]) -> Result<Group, GroupError> {
    let p = p as i64;
    let degree = (p * p - 1) as usize;
    let mut gens = Vec::with_capacity(mats.len());
    for m in mats {
        check_square(m, 2)?;
        if det2(m, p) == 0 {
            return Err(GroupError::NotInvertible(format!("{m:?}")));
        }
        let images = (1..p * p)
            .map(|v| {
                let (a, b) = (v % p, v / p);
                let x = reduce(m[0][0] * a + m[0][1] * b, p);
                let y = reduce(m[1][0] * a + m[1][1] * b, p);
                (x + p * y - 1) as u32
            })
            .collect();
        gens.push(Perm::from_images(images)?);
    }
    Group::generate(degree, gens)
}

/// Quaternion group of order 8, acting regularly on the nonzero vectors of `F_3²`.
pub fn quaternion() -> Group {
    gl23_subgroup("q8").expect("builtin Q8")
}

/// `SL₂(3)` on the nonzero vectors of `F_3²`.
pub fn sl23() -> Group {
    linear_action(
        3,
        &[vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]],
    )
    .expect("builtin SL2(3)")
}

/// `PSL₂(7)` on the projective line over `F_7`; point 7 is infinity.
pub fn psl27() -> Group {
    const INF: u32 = 7;
    let mobius = |f: &dyn Fn(u32) -> u32| {
        Perm::from_images((0..8).map(f).collect()).expect("Möbius map is a bijection")
    };
    let shift = mobius(&|x| if x == INF { INF } else { (x + 1) % 7 });
    let square = mobius(&|x| if x == INF { INF } else { (2 * x) % 7 });
    // x -> -1/x; inverses mod 7: 1,4,5,2,3,6
    let inv = [0u32, 1, 4, 5, 2, 3, 6];
    let flip = mobius(&|x| match x {
        INF => 0,
        0 => INF,
        _ => (7 - inv[x as usize]) % 7,
    });
    build(8, vec![shift, square, flip])
}

/// An abelian `p`-group acted on by `semidirect`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbelianPGroup {
    /// Cyclic of order `p^k`; automorphisms are units mod `p^k` given as 1x1 matrices.
    Cyclic { p: u64, k: u32 },
    /// `C_p × C_p`; automorphisms are invertible 2x2 matrices over `F_p`.
    Elementary { p: u64 },
}

impl AbelianPGroup {
    pub fn order(&self) -> u64 {
        match *self {
            AbelianPGroup::Cyclic { p, k } => p.pow(k),
            AbelianPGroup::Elementary { p } => p * p,
        }
    }
}

/// `P ⋊ A` as the affine action on the points of `P`: translations by `P`
/// together with the given automorphisms.
pub fn semidirect(base: AbelianPGroup, auts: &[Vec<Vec<i64>>]) -> Result<Group, GroupError> {
    let n = base.order() as i64;
    let degree = n as usize;
    let mut gens = Vec::new();
    match base {
        AbelianPGroup::Cyclic { p, .. } => {
            if n > 1 {
                gens.push(Perm::from_images(
                    (0..n).map(|x| ((x + 1) % n) as u32).collect(),
                )?);
            }
            for m in auts {
                check_square(m, 1)?;
                let u = reduce(m[0][0], n);
                if u % p as i64 == 0 {
                    return Err(GroupError::NotInvertible(format!("{u} mod {n}")));
                }
                gens.push(Perm::from_images(
                    (0..n).map(|x| ((u * x) % n) as u32).collect(),
                )?);
            }
        }
        AbelianPGroup::Elementary { p } => {
            let p = p as i64;
            let idx = |a: i64, b: i64| (reduce(a, p) + p * reduce(b, p)) as u32;
            gens.push(Perm::from_images(
                (0..n).map(|v| idx(v % p + 1, v / p)).collect(),
            )?);
            gens.push(Perm::from_images(
                (0..n).map(|v| idx(v % p, v / p + 1)).collect(),
            )?);
            for m in auts {
                check_square(m, 2)?;
                if det2(m, p) == 0 {
                    return Err(GroupError::NotInvertible(format!("{m:?}")));
                }
                gens.push(Perm::from_images(
                    (0..n)
                        .map(|v| {
                            let (a, b) = (v % p, v / p);
                            idx(m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b)
                        })
                        .collect(),
                )?);
            }
        }
    }
    Group::generate(degree, gens)
}

/// A `3'`-subgroup of `GL₂(3)` given by explicit generating matrices.
#[derive(Clone, Copy, Debug)]
pub struct Gl23Subgroup {
    pub slug: &'static str,
    pub iso: fn() -> IsoType,
    pub gens: &'static [[[i64; 2]; 2]],
}

impl Gl23Subgroup {
    pub fn matrices(&self) -> Vec<Vec<Vec<i64>>> {
        self.gens
            .iter()
            .map(|m| m.iter().map(|r| r.to_vec()).collect())
            .collect()
    }
}

const NEG_ID: [[i64; 2]; 2] = [[2, 0], [0, 2]];
const REFL: [[i64; 2]; 2] = [[1, 0], [0, 2]];
const ROT4: [[i64; 2]; 2] = [[0, 2], [1, 0]];
const ORD8: [[i64; 2]; 2] = [[1, 1], [2, 1]];
const QUAT_J: [[i64; 2]; 2] = [[1, 1], [1, 2]];

/// The `3'`-subgroups of `GL₂(3)` up to conjugacy, with `C2` listed twice for
/// its two actions (inversion and a reflection fixing one factor).
pub const GL23_SUBGROUPS: [Gl23Subgroup; 9] = [
    Gl23Subgroup {
        slug: "1",
        iso: || IsoType::Trivial,
        gens: &[],
    },
    Gl23Subgroup {
        slug: "c2inv",
        iso: || IsoType::C2,
        gens: &[NEG_ID],
    },
    Gl23Subgroup {
        slug: "c2refl",
        iso: || IsoType::C2,
        gens: &[REFL],
    },
    Gl23Subgroup {
        slug: "c4",
        iso: || IsoType::C4,
        gens: &[ROT4],
    },
    Gl23Subgroup {
        slug: "c2c2",
        iso: || IsoType::C2xC2,
        gens: &[NEG_ID, REFL],
    },
    Gl23Subgroup {
        slug: "c8",
        iso: || IsoType::C8,
        gens: &[ORD8],
    },
    Gl23Subgroup {
        slug: "d8",
        iso: || IsoType::D8,
        gens: &[ROT4, REFL],
    },
    Gl23Subgroup {
        slug: "q8",
        iso: || IsoType::Q8,
        gens: &[ROT4, QUAT_J],
    },
    Gl23Subgroup {
        slug: "sd16",
        iso: || IsoType::SD16,
        gens: &[ORD8, REFL],
    },
];

/// The named `GL₂(3)` subgroup acting on nonzero vectors, checked against its
/// expected isomorphism type.
pub fn gl23_subgroup(slug: &str) -> Result<Group, GroupError> {
    let entry = GL23_SUBGROUPS
        .iter()
        .find(|s| s.slug == slug)
        .ok_or_else(|| GroupError::BadAction(format!("unknown GL2(3) subgroup {slug}")))?;
    let g = linear_action(3, &entry.matrices())?;
    let found = IsoType::of(&g);
    if found != (entry.iso)() {
        return Err(GroupError::BadAction(format!(
            "matrices for {slug} generate {found}, expected {}",
            (entry.iso)()
        )));
    }
    Ok(g)
}
