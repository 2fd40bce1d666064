use std::collections::{BTreeSet, VecDeque};

use super::GroupError;

/// A finite group given by its multiplication table. `table[a][b]` is the
/// index of the product `a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        identity: usize,
        labels: Vec<String>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if labels.len() != n {
            return Err(GroupError::InvalidTable(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
        if identity >= n {
            return Err(GroupError::InvalidTable(format!("identity index {identity} out of range")));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GroupError::InvalidTable(format!("row {a} is malformed")));
            }
        }
        for (a, row) in table.iter().enumerate() {
            if table[identity][a] != a || row[identity] != a {
                return Err(GroupError::InvalidTable(format!(
                    "{identity} is not a two-sided identity for {a}"
                )));
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            let Some(b) = (0..n).find(|&b| row[b] == identity && table[b][a] == identity) else {
                return Err(GroupError::InvalidTable(format!("element {a} has no inverse")));
            };
            inverses.push(b);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            table,
            identity,
            inverses,
            labels,
        })
    }

    pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::OutOfRange("cyclic group of order 0".into()));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|a| a.to_string()).collect();
        FiniteGroup::from_table(table, 0, labels)
    }

    /// Dihedral group of order `2n`: rotations `r^k` then reflections `s r^k`.
    pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::OutOfRange("dihedral group of order 0".into()));
        }
        // Element (f, k) ↔ s^f r^k, with r s = s r^{-1}.
        let idx = |f: usize, k: usize| f * n + k;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for f1 in 0..2 {
            for k1 in 0..n {
                for f2 in 0..2 {
                    for k2 in 0..n {
                        let k = if f2 == 0 { (k1 + k2) % n } else { (n - k1 % n + k2) % n };
                        table[idx(f1, k1)][idx(f2, k2)] = idx((f1 + f2) % 2, k);
                    }
                }
            }
        }
        let labels = (0..2 * n)
            .map(|i| {
                let (f, k) = (i / n, i % n);
                match (f, k) {
                    (0, 0) => "e".to_string(),
                    (0, k) => format!("r{k}"),
                    (_, 0) => "s".to_string(),
                    (_, k) => format!("sr{k}"),
                }
            })
            .collect();
        FiniteGroup::from_table(table, 0, labels)
    }

    /// Direct product; element `(g, h)` has index `g·|H| + h`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (g.order(), h.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| g.table[x / m][y / m] * m + h.table[x % m][y % m])
                    .collect()
            })
            .collect();
        let labels = (0..n * m)
            .map(|x| format!("({},{})", g.labels[x / m], h.labels[x % m]))
            .collect();
        FiniteGroup::from_table(table, g.identity * m + h.identity, labels)
            .expect("direct product of groups is a group")
    }

    /// Symmetric group on `{1..n}` for `n ≤ 4`. Permutations are listed in
    /// lexicographic order of one-line notation and compose right to left:
    /// `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 || n > 4 {
            return Err(GroupError::OutOfRange(format!("symmetric group S{n} (need 1 ≤ n ≤ 4)")));
        }
        let perms = permutations(n);
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index_of(&(0..n).map(|i| s[t[i]]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(table, 0, labels)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, exp: i64) -> usize {
        let base = if exp < 0 { self.inv(a) } else { a };
        (0..exp.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Sorted indices of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// A generating set chosen greedily in index order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub = vec![self.identity];
        for a in 0..self.order() {
            if sub.binary_search(&a).is_err() {
                gens.push(a);
                sub = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Sorted indices of the commutator subgroup.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let commutators: BTreeSet<usize> = (0..n)
            .flat_map(|a| {
                (0..n).map(move |b| (a, b))
            })
            .map(|(a, b)| self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b)))
            .collect();
        self.subgroup_generated(&commutators.into_iter().collect::<Vec<_>>())
    }

    /// Order and exponent of the abelianization `G / [G, G]`.
    pub fn abelianization_order_and_exponent(&self) -> (usize, usize) {
        let derived = self.derived_subgroup();
        let in_derived = |x: usize| derived.binary_search(&x).is_ok();
        let order = self.order() / derived.len();
        let exponent = (0..self.order())
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while !in_derived(x) {
                    x = self.mul(x, a);
                    k += 1;
                }
                k
            })
            .fold(1, num_integer::lcm);
        (order, exponent)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Cycle notation on points `1..n`, e.g. `(123)` or `(12)(34)`; `e` for the identity.
fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cyclic() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert!(FiniteGroup::cyclic(0).is_err());
    }

    #[test]
    fn symmetric_three_order_census() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        let orders: Vec<usize> = (0..6).map(|a| s3.element_order(a)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 2);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
        assert!(!s3.is_abelian());
        assert!(s3.index_of_label("(123)").is_some());
        assert!(s3.index_of_label("(132)").is_some());
        assert!(FiniteGroup::symmetric(5).is_err());
    }

    #[test]
    fn symmetric_cycle_inverse_pairs() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let a = s3.index_of_label("(123)").unwrap();
        let b = s3.index_of_label("(132)").unwrap();
        assert_eq!(s3.inv(a), b);
    }

    #[test]
    fn klein_four() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let k = FiniteGroup::product(&z2, &z2);
        assert_eq!(k.order(), 4);
        assert!((0..4).all(|a| k.mul(a, a) == k.identity()));
    }

    #[test]
    fn dihedral_and_s4() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.abelianization_order_and_exponent(), (2, 2));
    }

    #[test]
    fn invalid_tables_rejected() {
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 1]], 0, vec!["a".into(), "b".into()]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0]], 1, vec!["a".into()]).is_err());
    }

    #[test]
    fn abelianization_of_s3() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.derived_subgroup().len(), 3);
        assert_eq!(s3.abelianization_order_and_exponent(), (2, 2));
    }

    #[test]
    fn random_triples_associate() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let groups = [
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::product(&FiniteGroup::symmetric(3).unwrap(), &z3),
        ];
        for g in &groups {
            for _ in 0..500 {
                let (a, b, c) = (
                    rng.gen_range(0..g.order()),
                    rng.gen_range(0..g.order()),
                    rng.gen_range(0..g.order()),
                );
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            }
        }
    }
}
