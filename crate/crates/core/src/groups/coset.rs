use std::collections::VecDeque;

use super::{GroupError, Letter, PresentedGroup, Word};

const UNDEFINED: usize = usize::MAX;

/// A completed coset table of the trivial subgroup: the regular
/// permutation representation of a finite presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    /// `perms[g][c]` is coset `c` acted on by generator `g`.
    perms: Vec<Vec<usize>>,
    /// A word taking coset 0 to coset `c`, for every `c`.
    representatives: Vec<Word>,
}

impl CosetTable {
    /// Group order, equal to the number of cosets.
    pub fn order(&self) -> usize {
        self.representatives.len()
    }

    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn representatives(&self) -> &[Word] {
        &self.representatives
    }

    /// Coset reached from `c` by reading `w` left to right.
    pub fn act(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, l| {
            if l.inverse {
                self.perms[l.generator].iter().position(|&d| d == c).expect("permutation")
            } else {
                self.perms[l.generator][c]
            }
        })
    }

    /// The coset of the element represented by `w`.
    pub fn element_of(&self, w: &Word) -> usize {
        self.act(0, w)
    }

    /// Whether every generator acts as a permutation, every relator of `p`
    /// fixes every coset, and the action is transitive.
    pub fn verify(&self, p: &PresentedGroup) -> bool {
        let n = self.order();
        if n == 0 || self.perms.len() != p.generator_count() {
            return false;
        }
        for perm in &self.perms {
            let mut seen = vec![false; n];
            for &d in perm {
                if d >= n || std::mem::replace(&mut seen[d], true) {
                    return false;
                }
            }
        }
        if !p.relators().iter().all(|r| (0..n).all(|c| self.act(c, r) == c)) {
            return false;
        }
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for perm in &self.perms {
                if !std::mem::replace(&mut reached[perm[c]], true) {
                    queue.push_back(perm[c]);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }
}

/// Coset enumeration over the trivial subgroup by the HLT strategy: each
/// live coset in order is scanned against every relator, then its undefined
/// entries are filled. Coincidences are processed with a union-find queue.
/// Fails with a budget error once more than `max_cosets` cosets have been
/// defined at the same time.
pub fn todd_coxeter(p: &PresentedGroup, max_cosets: usize) -> Result<CosetTable, GroupError> {
    if max_cosets == 0 {
        return Err(GroupError::Budget("max_cosets must be at least 1".into()));
    }
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| r.letters().iter().map(|&l| column(l)).collect())
        .collect();
    let mut e = Enumerator::new(2 * p.generator_count(), max_cosets);
    let mut c = 0;
    while c < e.table.len() {
        if e.is_live(c) {
            for r in &relators {
                if !e.is_live(c) {
                    break;
                }
                e.scan_and_fill(c, r)?;
            }
            for x in 0..e.columns {
                if !e.is_live(c) {
                    break;
                }
                if e.table[c][x] == UNDEFINED {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    Ok(e.standardize(p.generator_count()))
}

fn column(l: Letter) -> usize {
    2 * l.generator + usize::from(l.inverse)
}

fn inverse_column(x: usize) -> usize {
    x ^ 1
}

struct Enumerator {
    columns: usize,
    max_cosets: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    queue: Vec<usize>,
}

impl Enumerator {
    fn new(columns: usize, max_cosets: usize) -> Enumerator {
        Enumerator {
            columns,
            max_cosets,
            table: vec![vec![UNDEFINED; columns]],
            parent: vec![0],
            live: 1,
            queue: Vec::new(),
        }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), GroupError> {
        if self.live >= self.max_cosets {
            return Err(GroupError::Budget(format!(
                "coset table exceeded {} cosets",
                self.max_cosets
            )));
        }
        let n = self.table.len();
        self.table.push(vec![UNDEFINED; self.columns]);
        self.parent.push(n);
        self.live += 1;
        self.table[c][x] = n;
        self.table[n][inverse_column(x)] = c;
        Ok(())
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), GroupError> {
        let (mut f, mut b) = (c, c);
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j && self.table[f][w[i as usize]] != UNDEFINED {
                f = self.table[f][w[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inverse_column(w[j as usize])] != UNDEFINED {
                b = self.table[b][inverse_column(w[j as usize])];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.table[f][x] = b;
                self.table[b][inverse_column(x)] = f;
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = c;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop] = keep;
            self.live -= 1;
            self.queue.push(drop);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut k = 0;
        while k < self.queue.len() {
            let g = self.queue[k];
            k += 1;
            for x in 0..self.columns {
                let d = self.table[g][x];
                if d == UNDEFINED {
                    continue;
                }
                let xi = inverse_column(x);
                if self.table[d][xi] == g {
                    self.table[d][xi] = UNDEFINED;
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu][x] != UNDEFINED {
                    let t = self.table[mu][x];
                    self.merge(nu, t);
                } else if self.table[nu][xi] != UNDEFINED {
                    let t = self.table[nu][xi];
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][xi] = mu;
                }
            }
        }
    }

    /// Renumbers live cosets in breadth-first order from coset 0 and
    /// records a shortest representative word for each.
    fn standardize(mut self, generators: usize) -> CosetTable {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.is_live(c)).collect();
        let mut index = vec![UNDEFINED; self.table.len()];
        let mut order = vec![0];
        let mut representatives = vec![Word::identity()];
        index[0] = 0;
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for x in 0..self.columns {
                let d = self.rep(self.table[c][x]);
                if index[d] == UNDEFINED {
                    index[d] = order.len();
                    order.push(d);
                    let letter = Letter::new(x / 2, x % 2 == 1);
                    representatives.push(representatives[k].mul(&Word::new([letter])));
                }
            }
            k += 1;
        }
        debug_assert_eq!(order.len(), live.len());
        let perms = (0..generators)
            .map(|g| {
                order
                    .iter()
                    .map(|&c| {
                        let d = self.table[c][2 * g];
                        index[self.rep(d)]
                    })
                    .collect()
            })
            .collect();
        CosetTable {
            perms,
            representatives,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[(usize, i64)]) -> Word {
        Word::from_powers(p)
    }

    fn order(p: &PresentedGroup) -> usize {
        let t = todd_coxeter(p, 10_000).unwrap();
        assert!(t.verify(p), "{p}");
        t.order()
    }

    #[test]
    fn cyclic_orders() {
        for n in 1..=12 {
            let p = PresentedGroup::with_letters(1, vec![w(&[(0, n)])]);
            assert_eq!(order(&p), n as usize);
        }
    }

    #[test]
    fn dihedral_orders() {
        for n in 2..=6 {
            // ⟨r, s | r^n, s², (sr)²⟩
            let p = PresentedGroup::with_letters(2, vec![w(&[(0, n)]), w(&[(1, 2)]), w(&[(1, 1), (0, 1), (1, 1), (0, 1)])]);
            assert_eq!(order(&p), 2 * n as usize);
        }
    }

    #[test]
    fn coxeter_presentation_of_s3() {
        let p = PresentedGroup::with_letters(2, vec![w(&[(0, 2)]), w(&[(1, 2)]), w(&[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)])]);
        assert_eq!(order(&p), 6);
    }

    #[test]
    fn coxeter_presentation_of_s4() {
        let (a, b, c) = (0, 1, 2);
        let p = PresentedGroup::with_letters(
            3,
            vec![
                w(&[(a, 2)]),
                w(&[(b, 2)]),
                w(&[(c, 2)]),
                w(&[(a, 1), (b, 1), (a, 1), (b, 1), (a, 1), (b, 1)]),
                w(&[(b, 1), (c, 1), (b, 1), (c, 1), (b, 1), (c, 1)]),
                w(&[(a, 1), (c, 1), (a, 1), (c, 1)]),
            ],
        );
        assert_eq!(order(&p), 24);
    }

    #[test]
    fn quaternion_group() {
        // ⟨i, j | i⁴, i² j⁻², i j i j⁻¹⟩... using ⟨a,b | a⁴, a²b⁻², b⁻¹ab a⟩
        let p = PresentedGroup::with_letters(2, vec![w(&[(0, 4)]), w(&[(0, 2), (1, -2)]), w(&[(1, -1), (0, 1), (1, 1), (0, 1)])]);
        assert_eq!(order(&p), 8);
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(order(&PresentedGroup::with_letters(0, vec![])), 1);
        assert_eq!(order(&PresentedGroup::with_letters(2, vec![w(&[(0, 1)]), w(&[(1, 1)])])), 1);
        // ⟨a, b | a b a⁻¹ b⁻², b a b⁻¹ a⁻²⟩ is trivial
        let p = PresentedGroup::with_letters(2, vec![w(&[(0, 1), (1, 1), (0, -1), (1, -2)]), w(&[(1, 1), (0, 1), (1, -1), (0, -2)])]);
        assert_eq!(order(&p), 1);
    }

    #[test]
    fn infinite_group_exhausts_budget() {
        let p = PresentedGroup::with_letters(1, vec![]);
        assert!(matches!(todd_coxeter(&p, 1000), Err(GroupError::Budget(_))));
        assert!(matches!(todd_coxeter(&p, 0), Err(GroupError::Budget(_))));
    }

    #[test]
    fn representatives_reach_their_cosets() {
        let p = PresentedGroup::with_letters(2, vec![w(&[(0, 3)]), w(&[(1, 2)]), w(&[(0, 1), (1, 1), (0, 1), (1, 1)])]);
        let t = todd_coxeter(&p, 100).unwrap();
        for (c, r) in t.representatives().iter().enumerate() {
            assert_eq!(t.element_of(r), c);
        }
    }
}
