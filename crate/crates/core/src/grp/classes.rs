use super::{Group, Perm};

/// Conjugacy classes of a group in a fixed order: identity first, then by
/// element order, class size, and smallest member.
#[derive(Clone, Debug)]
pub struct ConjClassSet {
    group_order: u64,
    reps: Vec<Perm>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    class_of: Vec<usize>,
    power_map: Vec<Vec<usize>>,
}

impl ConjClassSet {
    pub fn new(group: &Group) -> Self {
        let n = group.elements().len();
        let mut raw_class = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            raw_class[start] = id;
            let mut orbit = vec![start];
            let mut cursor = 0;
            while cursor < orbit.len() {
                let x = &group.elements()[orbit[cursor]];
                cursor += 1;
                for g in group.generators() {
                    let y = group.index_of(&x.conjugate_by(g)).expect("closed");
                    if raw_class[y] == usize::MAX {
                        raw_class[y] = id;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }

        // orbit[0] is the smallest member since elements are sorted.
        let mut keyed: Vec<(u64, u64, usize, Vec<usize>)> = orbits
            .into_iter()
            .map(|o| {
                let ord = group.elements()[o[0]].order();
                (ord, o.len() as u64, o[0], o)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));

        let mut class_of = vec![0; n];
        let mut reps = Vec::with_capacity(keyed.len());
        let mut sizes = Vec::with_capacity(keyed.len());
        let mut orders = Vec::with_capacity(keyed.len());
        for (ci, (ord, size, min, members)) in keyed.iter().enumerate() {
            for &m in members {
                class_of[m] = ci;
            }
            reps.push(group.elements()[*min].clone());
            sizes.push(*size);
            orders.push(*ord);
        }

        let power_map = reps
            .iter()
            .zip(&orders)
            .map(|(r, &o)| {
                let mut row = Vec::with_capacity(o as usize);
                let mut acc = group.identity();
                for _ in 0..o {
                    row.push(class_of[group.index_of(&acc).expect("closed")]);
                    acc = acc.mul(r);
                }
                row
            })
            .collect();

        ConjClassSet {
            group_order: group.order(),
            reps,
            sizes,
            orders,
            class_of,
            power_map,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn reps(&self) -> &[Perm] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Element order of each class representative.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Class index of the element with the given group element index.
    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class of `rep_i ^ j` for any integer `j`.
    pub fn power(&self, class: usize, j: i64) -> usize {
        let o = self.orders[class] as i64;
        self.power_map[class][j.rem_euclid(o) as usize]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.power(class, -1)
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.group_order / self.sizes[class]
    }
}
