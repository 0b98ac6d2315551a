use super::{Group, GroupError, Perm};

/// A factor group realized as the action on right cosets, together with the
/// natural surjection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    /// `map[i]` is the index in `group` of the image of element `i` of the
    /// original group.
    pub map: Vec<usize>,
}

/// `G/N` as the permutation action of `G` on the right cosets of `N`.
pub fn quotient(group: &Group, normal: &Group) -> Result<Quotient, GroupError> {
    if !normal.is_subgroup_of(group) {
        return Err(GroupError::NotASubgroup);
    }
    if !normal.is_normal_in(group) {
        return Err(GroupError::NotNormal);
    }
    let n = group.elements().len();
    let mut coset_of = vec![usize::MAX; n];
    let mut coset_reps: Vec<usize> = Vec::new();
    for i in 0..n {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = coset_reps.len();
        coset_reps.push(i);
        let x = &group.elements()[i];
        for h in normal.elements() {
            let j = group.index_of(&h.mul(x)).expect("closed");
            coset_of[j] = id;
        }
    }

    // Nx acts by Ny -> Nyx; the permutation depends only on the coset of x.
    let action = |x: &Perm| -> Perm {
        let images = coset_reps
            .iter()
            .map(|&r| {
                let y = group.elements()[r].mul(x);
                coset_of[group.index_of(&y).expect("closed")] as u32
            })
            .collect();
        Perm::from_images(images).expect("coset action is a permutation")
    };
    let degree = coset_reps.len();
    let gens: Vec<Perm> = group.generators().iter().map(action).collect();
    let image = Group::generate_bounded(degree, gens, usize::MAX)?;

    let per_coset: Vec<usize> = coset_reps
        .iter()
        .map(|&r| {
            image
                .index_of(&action(&group.elements()[r]))
                .expect("image of a group element")
        })
        .collect();
    let map = coset_of.iter().map(|&c| per_coset[c]).collect();
    Ok(Quotient { group: image, map })
}
