use super::{split_p_part, ConjClassSet, Group, GroupError, Perm};

pub fn centralizer(group: &Group, g: &Perm) -> Result<Group, GroupError> {
    if g.degree() != group.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: group.degree(),
            found: g.degree(),
        });
    }
    let elems = group
        .elements()
        .iter()
        .filter(|x| x.commutes_with(g))
        .cloned()
        .collect();
    Ok(Group::from_closed_set(group.degree(), elems))
}

pub fn normalizer(group: &Group, sub: &Group) -> Result<Group, GroupError> {
    if !sub.is_subgroup_of(group) {
        return Err(GroupError::NotASubgroup);
    }
    let elems = group
        .elements()
        .iter()
        .filter(|x| {
            sub.generators()
                .iter()
                .all(|h| sub.contains(&h.conjugate_by(x)))
        })
        .cloned()
        .collect();
    Ok(Group::from_closed_set(group.degree(), elems))
}

pub fn center(group: &Group) -> Group {
    let elems = group
        .elements()
        .iter()
        .filter(|x| group.generators().iter().all(|g| x.commutes_with(g)))
        .cloned()
        .collect();
    Group::from_closed_set(group.degree(), elems)
}

/// Elementwise centralizer of a subgroup.
pub(crate) fn centralizer_of_subgroup(group: &Group, sub: &Group) -> Group {
    let elems = group
        .elements()
        .iter()
        .filter(|x| sub.generators().iter().all(|h| x.commutes_with(h)))
        .cloned()
        .collect();
    Group::from_closed_set(group.degree(), elems)
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// A Sylow `p`-subgroup, grown one element at a time inside normalizers.
///
/// Deterministic: at each step the smallest eligible element is adjoined.
pub fn sylow(group: &Group, p: u64) -> Group {
    let (target, _) = split_p_part(group.order(), p);
    let mut current = Group::trivial(group.degree());
    while current.order() < target {
        let norm = normalizer(group, &current).expect("current is a subgroup");
        let x = norm
            .elements()
            .iter()
            .find(|x| !current.contains(x) && is_p_power(x.order(), p))
            .expect("a proper p-subgroup has a p-element in its normalizer outside it")
            .clone();
        let mut gens = current.generators().to_vec();
        gens.push(x);
        current = group.subgroup(gens);
    }
    current
}

/// Smallest normal subgroup of `group` containing `seeds`.
pub fn normal_closure(group: &Group, seeds: &[Perm]) -> Group {
    let mut current = group.subgroup(seeds.to_vec());
    loop {
        let extra: Vec<Perm> = current
            .generators()
            .iter()
            .flat_map(|h| group.generators().iter().map(move |g| h.conjugate_by(g)))
            .filter(|c| !current.contains(c))
            .collect();
        if extra.is_empty() {
            return current;
        }
        let mut gens = current.generators().to_vec();
        gens.extend(extra);
        current = group.subgroup(gens);
    }
}

/// Largest normal subgroup of order prime to `p`.
///
/// Generated by the classes whose normal closure is itself a `p'`-group.
pub fn o_p_prime(group: &Group, p: u64) -> Group {
    let classes = ConjClassSet::new(group);
    let mut gens = Vec::new();
    for rep in classes.reps().iter().skip(1) {
        if rep.order() % p == 0 {
            continue;
        }
        let closure = normal_closure(group, std::slice::from_ref(rep));
        if closure.order() % p != 0 {
            gens.push(rep.clone());
        }
    }
    normal_closure(group, &gens)
}

/// True iff the `p'`-elements generate a `p'`-subgroup, which is then the
/// normal `p`-complement.
pub fn has_normal_p_complement(group: &Group, p: u64) -> bool {
    let gens: Vec<Perm> = group
        .elements()
        .iter()
        .filter(|x| x.order() % p != 0)
        .cloned()
        .collect();
    let span = group.subgroup(gens);
    span.order() % p != 0
}

/// True iff the group is nontrivial and every nontrivial class generates it
/// as a normal subgroup.
pub fn is_simple(group: &Group) -> bool {
    if group.order() == 1 {
        return false;
    }
    let classes = ConjClassSet::new(group);
    classes
        .reps()
        .iter()
        .skip(1)
        .all(|r| normal_closure(group, std::slice::from_ref(r)).order() == group.order())
}
