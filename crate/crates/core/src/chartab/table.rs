use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::dixon::{central_characters_mod, class_mult_coeffs, dixon_prime, lift_character};
use super::modp::PrimeField;
use super::{ChartabError, Cyclotomic};
use crate::grp::{is_prime, ConjClassSet, Group};

/// Irreducible characters of a group as exact cyclotomic values.
///
/// Rows are ordered trivial character first, then by degree, then
/// lexicographically by their coordinates over `Q(ζ_exponent)`. The value at
/// class `i` is stored over `Q(ζ_o)` where `o` is the order of the class
/// representative.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: ConjClassSet,
    chars: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    exponent: u64,
    prime: u64,
}

pub fn character_table(group: &Group) -> Result<CharacterTable, ChartabError> {
    let ell = dixon_prime(group.order(), group.exponent());
    character_table_with_prime(group, ell)
}

/// Computes the table over `F_ℓ` for a caller-chosen Dixon prime `ℓ`.
pub fn character_table_with_prime(group: &Group, ell: u64) -> Result<CharacterTable, ChartabError> {
    let exponent = group.exponent();
    if !is_prime(ell) || ell % exponent != 1 % exponent || ell * ell <= 4 * group.order() {
        return Err(ChartabError::BadPrime(ell));
    }
    let classes = ConjClassSet::new(group);
    let coeffs = class_mult_coeffs(group, &classes);
    let field = PrimeField::new(ell);
    let root = field.primitive_root();
    let omegas = central_characters_mod(&coeffs, field)?;

    let mut rows: Vec<(u64, Vec<Cyclotomic>)> = omegas
        .iter()
        .map(|w| lift_character(w, &classes, field, root))
        .collect::<Result<_, _>>()?;

    let n = exponent as u32;
    let is_trivial = |r: &[Cyclotomic]| r.iter().all(|v| v.as_integer() == Some(1));
    rows.sort_by(|a, b| {
        is_trivial(&b.1)
            .cmp(&is_trivial(&a.1))
            .then(a.0.cmp(&b.0))
            .then_with(|| {
                a.1.iter()
                    .zip(&b.1)
                    .map(|(x, y)| x.cmp_at(y, n))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    });
    let (degrees, chars) = rows.into_iter().unzip();
    Ok(CharacterTable {
        classes,
        chars,
        degrees,
        exponent,
        prime: ell,
    })
}

impl CharacterTable {
    pub fn classes(&self) -> &ConjClassSet {
        &self.classes
    }

    pub fn chars(&self) -> &[Vec<Cyclotomic>] {
        &self.chars
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.chars[chi][class]
    }

    pub fn group_order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The prime `ℓ` the table was computed over.
    pub fn dixon_prime(&self) -> u64 {
        self.prime
    }

    /// Rows with every value written over `Q(ζ_exponent)`.
    pub fn rows_at_exponent(&self) -> Vec<Vec<Cyclotomic>> {
        let n = self.exponent as u32;
        self.chars
            .iter()
            .map(|r| r.iter().map(|v| v.lift_to(n)).collect())
            .collect()
    }

    pub fn rational_row_count(&self) -> usize {
        self.chars
            .iter()
            .filter(|r| r.iter().all(|v| v.as_integer().is_some()))
            .count()
    }

    #[cfg(test)]
    pub(crate) fn set_value(&mut self, chi: usize, class: usize, v: Cyclotomic) {
        self.chars[chi][class] = v;
    }

    pub fn to_report(&self) -> TableReport {
        TableReport {
            order: self.group_order(),
            conductor: self.exponent,
            dixon_prime: self.prime,
            classes: (0..self.classes.len())
                .map(|i| ClassReport {
                    rep: self.classes.reps()[i].to_string(),
                    size: self.classes.sizes()[i],
                    order: self.classes.orders()[i],
                })
                .collect(),
            degrees: self.degrees.clone(),
            rows: self
                .chars
                .iter()
                .map(|r| r.iter().map(|v| v.coeffs().to_vec()).collect())
                .collect(),
        }
    }
}

/// Serialized form of a table. Each value is a coefficient vector in the power
/// basis of `Q(ζ_o)`, `o` being the element order of that column's class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub order: u64,
    pub conductor: u64,
    pub dixon_prime: u64,
    pub classes: Vec<ClassReport>,
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub rep: String,
    pub size: u64,
    pub order: u64,
}

/// Checks both orthogonality relations in exact arithmetic.
pub fn verify_orthogonality(table: &CharacterTable) -> bool {
    let k = table.len();
    let classes = table.classes();
    if k != classes.len() {
        return false;
    }
    let rows = table.rows_at_exponent();
    let conj: Vec<Vec<Cyclotomic>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.conj()).collect())
        .collect();
    let order = table.group_order() as i64;
    let zero = Cyclotomic::zero(table.exponent() as u32);

    for a in 0..k {
        for b in a..k {
            let mut acc = zero.clone();
            for i in 0..k {
                acc = &acc + &(&rows[a][i] * &conj[b][i]).scale(classes.sizes()[i] as i64);
            }
            let expect = if a == b { order } else { 0 };
            if acc != Cyclotomic::from_int(expect) {
                return false;
            }
        }
    }
    for i in 0..k {
        for j in i..k {
            let mut acc = zero.clone();
            for chi in 0..k {
                acc = &acc + &(&rows[chi][i] * &conj[chi][j]);
            }
            let expect = if i == j {
                classes.centralizer_order(i) as i64
            } else {
                0
            };
            if acc != Cyclotomic::from_int(expect) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::next_dixon_prime;
    use crate::grp::{alternating, cyclic, quaternion, symmetric};

    fn ints(row: &[Cyclotomic]) -> Vec<i64> {
        row.iter().map(|v| v.as_integer().unwrap()).collect()
    }

    #[test]
    fn c2_table() {
        let t = character_table(&cyclic(2)).unwrap();
        assert_eq!(ints(&t.chars()[0]), vec![1, 1]);
        assert_eq!(ints(&t.chars()[1]), vec![1, -1]);
    }

    #[test]
    fn trivial_group_table() {
        let t = character_table(&cyclic(1)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.degrees(), &[1]);
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn sym3_table() {
        let t = character_table(&symmetric(3)).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        // classes: identity, transpositions, 3-cycles
        assert_eq!(ints(&t.chars()[2]), vec![2, 0, -1]);
        assert_eq!(ints(&t.chars()[1]), vec![1, -1, 1]);
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn q8_degrees() {
        let t = character_table(&quaternion()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        assert!(verify_orthogonality(&t));
    }

    #[test]
    fn c3_has_nonrational_values() {
        let t = character_table(&cyclic(3)).unwrap();
        assert_eq!(t.rational_row_count(), 1);
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        let vals: Vec<&Cyclotomic> = t.chars()[1..].iter().map(|r| &r[1]).collect();
        assert!(vals.contains(&&w) && vals.contains(&&w2));
    }

    #[test]
    fn perturbed_table_fails_orthogonality() {
        let mut t = character_table(&symmetric(4)).unwrap();
        assert!(verify_orthogonality(&t));
        let bumped = &t.chars()[2][1] + &Cyclotomic::from_int(1);
        t.set_value(2, 1, bumped);
        assert!(!verify_orthogonality(&t));
    }

    #[test]
    fn alt5_table_and_prime_independence() {
        let g = alternating(5);
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
        assert!(verify_orthogonality(&t));
        let ell2 = next_dixon_prime(g.order(), g.exponent(), t.dixon_prime());
        let t2 = character_table_with_prime(&g, ell2).unwrap();
        let mut a = t.rows_at_exponent();
        let mut b = t2.rows_at_exponent();
        let key = |r: &Vec<Cyclotomic>| r.iter().map(|v| v.coeffs().to_vec()).collect::<Vec<_>>();
        a.sort_by_key(key);
        b.sort_by_key(key);
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_primes() {
        let g = symmetric(3);
        assert_eq!(
            character_table_with_prime(&g, 11).unwrap_err(),
            ChartabError::BadPrime(11)
        );
        assert_eq!(
            character_table_with_prime(&g, 15).unwrap_err(),
            ChartabError::BadPrime(15)
        );
        assert!(character_table_with_prime(&g, 13).is_ok());
    }
}
