//! Brute-force submodule lattice: every subspace is an explicit set of vectors,
//! built from addition and scalar tables only. Shares no code with the engine.

#![allow(dead_code)]

use std::collections::HashSet;

/// Membership bitset over all `p^d` vectors.
pub type ElemSet = Vec<u64>;

/// Largest space for which the addition table is precomputed.
const TABLE_LIMIT: usize = 1024;

pub struct Lattice {
    pub p: u32,
    pub d: usize,
    pub size: usize,
    add: Vec<u32>,
    smul: Vec<u32>,
    act: Vec<Vec<u32>>,
}

impl Lattice {
    /// `gens` are row-major d×d matrices acting on column vectors.
    pub fn new(p: u32, d: usize, gens: &[Vec<Vec<u32>>]) -> Self {
        let size = (p as usize).pow(d as u32);
        let mut l = Lattice { p, d, size, add: Vec::new(), smul: Vec::new(), act: Vec::new() };
        let vecs: Vec<Vec<u32>> = (0..size).map(|i| l.vector(i)).collect();
        if size <= TABLE_LIMIT {
            l.add = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    l.add.push(l.add_direct(a, b) as u32);
                }
            }
        }
        for c in 0..p {
            for a in &vecs {
                let s: Vec<u32> = a.iter().map(|x| x * c % p).collect();
                l.smul.push(l.index(&s) as u32);
            }
        }
        for g in gens {
            let img = vecs
                .iter()
                .map(|v| {
                    let w: Vec<u32> =
                        g.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % p).collect();
                    l.index(&w) as u32
                })
                .collect();
            l.act.push(img);
        }
        l
    }

    fn add_direct(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.vector(a), self.vector(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.index(&s)
    }

    fn sum(&self, a: usize, b: usize) -> usize {
        if self.add.is_empty() {
            self.add_direct(a, b)
        } else {
            self.add[a * self.size + b] as usize
        }
    }

    /// First coordinate most significant.
    pub fn vector(&self, mut i: usize) -> Vec<u32> {
        let mut v = vec![0; self.d];
        for k in (0..self.d).rev() {
            v[k] = (i % self.p as usize) as u32;
            i /= self.p as usize;
        }
        v
    }

    pub fn index(&self, v: &[u32]) -> usize {
        v.iter().fold(0, |acc, &x| acc * self.p as usize + x as usize)
    }

    pub fn empty(&self) -> ElemSet {
        vec![0; self.size.div_ceil(64)]
    }

    pub fn has(set: &ElemSet, i: usize) -> bool {
        set[i / 64] >> (i % 64) & 1 == 1
    }

    fn put(set: &mut ElemSet, i: usize) {
        set[i / 64] |= 1 << (i % 64);
    }

    pub fn count(set: &ElemSet) -> usize {
        set.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn members(&self, set: &ElemSet) -> Vec<usize> {
        (0..self.size).filter(|&i| Self::has(set, i)).collect()
    }

    /// Smallest subspace containing `base` (already a subspace) and `seeds`, closed
    /// under the generators when `stable` is set.
    pub fn closure_from(&self, base: &ElemSet, seeds: &[usize], stable: bool) -> ElemSet {
        let mut set = base.clone();
        let mut elems = self.members(&set);
        if elems.is_empty() {
            Self::put(&mut set, 0);
            elems.push(0);
        }
        let mut work: Vec<usize> = seeds.to_vec();
        if stable {
            for &e in &elems {
                for a in &self.act {
                    work.push(a[e] as usize);
                }
            }
        }
        while let Some(w) = work.pop() {
            if Self::has(&set, w) {
                continue;
            }
            let mut grown = Vec::with_capacity(elems.len() * self.p as usize);
            for c in 0..self.p as usize {
                let cw = self.smul[c * self.size + w] as usize;
                for &s in &elems {
                    grown.push(self.sum(s, cw));
                }
            }
            for &g in &grown {
                Self::put(&mut set, g);
            }
            elems = self.members(&set);
            if stable {
                for a in &self.act {
                    work.push(a[w] as usize);
                }
            }
        }
        set
    }

    pub fn span(&self, seeds: &[usize], stable: bool) -> ElemSet {
        self.closure_from(&self.empty(), seeds, stable)
    }

    /// Every generator-stable subspace, found by breadth-first growth from zero.
    pub fn submodules(&self) -> Vec<ElemSet> {
        let zero = self.span(&[], true);
        let mut seen: HashSet<ElemSet> = HashSet::from([zero.clone()]);
        let mut order = vec![zero];
        let mut next = 0;
        while next < order.len() {
            let s = order[next].clone();
            next += 1;
            for v in 1..self.size {
                if Self::has(&s, v) || !self.normalized(v) {
                    continue;
                }
                let t = self.closure_from(&s, &[v], true);
                if seen.insert(t.clone()) {
                    order.push(t);
                }
            }
        }
        order
    }

    fn normalized(&self, v: usize) -> bool {
        self.vector(v).iter().find(|&&x| x != 0) == Some(&1)
    }

    pub fn is_stable(&self, set: &ElemSet) -> bool {
        self.members(set).iter().all(|&e| self.act.iter().all(|a| Self::has(set, a[e] as usize)))
    }

    /// Element set of the span of explicit row vectors.
    pub fn set_of_rows(&self, rows: &[Vec<u32>]) -> ElemSet {
        let seeds: Vec<usize> = rows.iter().map(|r| self.index(r)).collect();
        self.span(&seeds, false)
    }
}

pub fn intersect(a: &ElemSet, b: &ElemSet) -> ElemSet {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

pub fn is_subset(a: &ElemSet, b: &ElemSet) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}
