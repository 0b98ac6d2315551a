use super::subgroups::centralizer_of_subgroup;
use super::{center, normalizer, sylow, Group, GroupError, IsoType, Perm};

/// Sylow normalizer data for an abelian Sylow subgroup `P`.
#[derive(Clone, Debug)]
pub struct LocalData {
    pub sylow: Group,
    pub normalizer_order: u64,
    pub centralizer_order: u64,
    /// `N_G(P)/C_G(P)` realized as permutations of the elements of `P`.
    pub action: Group,
    pub iso: IsoType,
    /// Every nonidentity automorphism in `action` fixes only the identity of `P`.
    pub fixed_point_free: bool,
}

impl LocalData {
    /// `|N_G(P) : C_G(P)|`.
    pub fn inertial_index(&self) -> u64 {
        self.action.order()
    }
}

/// Conjugation action of `N_G(P)` on the elements of a subgroup `P`.
pub(crate) fn conjugation_action(norm: &Group, sub: &Group) -> Group {
    let gens = norm
        .generators()
        .iter()
        .map(|n| {
            let images = sub
                .elements()
                .iter()
                .map(|x| sub.index_of(&x.conjugate_by(n)).expect("normalizes") as u32)
                .collect();
            Perm::from_images(images).expect("conjugation permutes the subgroup")
        })
        .collect();
    Group::generate_bounded(sub.elements().len(), gens, usize::MAX)
        .expect("automorphism group of an enumerated group is bounded")
}

pub fn local_data(group: &Group, p: u64) -> Result<LocalData, GroupError> {
    let sylow = sylow(group, p);
    if !sylow.is_abelian() {
        return Err(GroupError::NonabelianSylow { p });
    }
    let norm = normalizer(group, &sylow)?;
    let cent = centralizer_of_subgroup(group, &sylow);
    let action = conjugation_action(&norm, &sylow);
    debug_assert_eq!(action.order() * cent.order(), norm.order());
    let fixed_point_free = action
        .elements()
        .iter()
        .skip(1)
        .all(|a| (1..a.degree() as u32).all(|x| a.apply(x) != x));
    Ok(LocalData {
        iso: IsoType::of(&action),
        normalizer_order: norm.order(),
        centralizer_order: cent.order(),
        sylow,
        action,
        fixed_point_free,
    })
}

/// `|N_G(P) : P·C_G(P)|` for a Sylow `p`-subgroup `P`, abelian or not.
pub fn sylow_outer_index(group: &Group, p: u64) -> u64 {
    let sylow = sylow(group, p);
    let norm = normalizer(group, &sylow).expect("Sylow is a subgroup");
    let cent = centralizer_of_subgroup(group, &sylow);
    // |P·C| = |P||C| / |P ∩ C| and P ∩ C_G(P) = Z(P)
    let pc = sylow.order() * cent.order() / center(&sylow).order();
    norm.order() / pc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{alternating, gl23_subgroup, semidirect, sl23, AbelianPGroup, GL23_SUBGROUPS};

    fn c3c3_by(m: Vec<Vec<i64>>) -> Group {
        semidirect(AbelianPGroup::Elementary { p: 3 }, &[m]).unwrap()
    }

    #[test]
    fn inversion_is_fixed_point_free() {
        let g = c3c3_by(vec![vec![2, 0], vec![0, 2]]);
        let d = local_data(&g, 3).unwrap();
        assert_eq!(d.iso, IsoType::C2);
        assert!(d.fixed_point_free);
        assert_eq!(d.inertial_index(), 2);
    }

    #[test]
    fn reflection_fixes_a_factor() {
        let g = c3c3_by(vec![vec![1, 0], vec![0, 2]]);
        let d = local_data(&g, 3).unwrap();
        assert_eq!(d.iso, IsoType::C2);
        assert!(!d.fixed_point_free);
    }

    #[test]
    fn alt5_at_five() {
        let d = local_data(&alternating(5), 5).unwrap();
        assert_eq!(d.iso, IsoType::C2);
        assert_eq!(d.normalizer_order, 10);
        assert_eq!(d.centralizer_order, 5);
    }

    #[test]
    fn nonabelian_sylow_is_an_error() {
        assert_eq!(
            local_data(&sl23(), 2).unwrap_err(),
            GroupError::NonabelianSylow { p: 2 }
        );
        assert_eq!(sylow_outer_index(&sl23(), 2), 3);
    }

    #[test]
    fn local_action_recovers_each_gl23_subgroup() {
        for s in GL23_SUBGROUPS {
            let g = semidirect(AbelianPGroup::Elementary { p: 3 }, &s.matrices()).unwrap();
            let d = local_data(&g, 3).unwrap();
            assert_eq!(d.iso, (s.iso)(), "{}", s.slug);
            assert_eq!(d.inertial_index(), gl23_subgroup(s.slug).unwrap().order());
            assert_eq!(48 % d.inertial_index(), 0);
            assert_ne!(d.inertial_index() % 3, 0);
        }
    }
}
