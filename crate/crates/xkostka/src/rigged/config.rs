use crate::crystal::{cartan, Weight};
use crate::tableau::Partition;

/// An `L(μ)`-configuration `ν = (ν^{(1)}, …, ν^{(n-1)})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub mu: Partition,
    pub n: usize,
    pub nu: Vec<Partition>,
}

impl Configuration {
    pub fn new(mu: Partition, n: usize, mut nu: Vec<Partition>) -> Self {
        nu.resize(n.saturating_sub(1), Partition::empty());
        Configuration { mu, n, nu }
    }

    pub fn empty(mu: Partition, n: usize) -> Self {
        Self::new(mu, n, Vec::new())
    }

    /// `ν^{(a)}` with `ν^{(0)} = μ` and `ν^{(a)} = ∅` for `a ≥ n`.
    pub fn level(&self, a: usize) -> &Partition {
        static EMPTY: Partition = Partition::EMPTY;
        if a == 0 {
            &self.mu
        } else {
            self.nu.get(a - 1).unwrap_or(&EMPTY)
        }
    }

    pub fn m(&self, a: usize, i: usize) -> usize {
        self.level(a).multiplicity(i)
    }

    /// `p_i^{(a)} = Q_i(ν^{(a-1)}) − 2Q_i(ν^{(a)}) + Q_i(ν^{(a+1)})`.
    pub fn vacancy(&self, a: usize, i: usize) -> i64 {
        let q = |b: usize| self.level(b).q(i) as i64;
        q(a - 1) - 2 * q(a) + q(a + 1)
    }

    /// `Σ_j min(i,j) L_j^{(a)} − Σ_{b,j} (α_a,α_b) min(i,j) m_j^{(b)}` with
    /// `L_j^{(a)} = δ_{a,1} m_j(μ)`.
    pub fn vacancy_general(&self, a: usize, i: usize) -> i64 {
        let mut p = 0i64;
        if a == 1 {
            p += self.mu.parts().iter().map(|&mj| i.min(mj) as i64).sum::<i64>();
        }
        for b in 1..self.n {
            let c = cartan(a, b);
            if c == 0 {
                continue;
            }
            for &j in self.level(b).parts() {
                p -= c * i.min(j) as i64;
            }
        }
        p
    }

    /// Largest part over `μ` and every level; vacancy numbers are constant
    /// beyond it.
    pub fn max_length(&self) -> usize {
        self.nu.iter().chain(std::iter::once(&self.mu)).map(|p| p.part(0)).max().unwrap_or(0)
    }

    /// `wt(ν) = Σ_a (|ν^{(a-1)}| − |ν^{(a)}|) ε̄_a`.
    pub fn weight(&self) -> Weight {
        Weight((1..=self.n).map(|a| self.level(a - 1).size() as i64 - self.level(a).size() as i64).collect())
    }

    /// `½ Σ (α_a,α_b) min(i,j) m_i^{(a)} m_j^{(b)}`.
    pub fn cc(&self) -> i64 {
        let mut total = 0i64;
        for a in 1..self.n {
            for &i in self.level(a).parts() {
                total += self.level(a).q(i) as i64 - self.level(a + 1).q(i) as i64;
            }
        }
        total
    }

    /// `cc(ν) − |ν^{(s)}|`.
    pub fn cc_double(&self, s: usize) -> i64 {
        self.cc() - if s == 0 { 0 } else { self.level(s).size() as i64 }
    }

    /// `p_i^{(a)} + δ_{a,s} i ≥ 0` for every `a` and every `i ≥ 1`.
    pub fn is_admissible(&self, s: usize) -> bool {
        let top = self.max_length().max(1);
        (1..self.n).all(|a| (1..=top).all(|i| self.vacancy(a, i) + shift(a, s, i) >= 0))
    }

    /// The same condition, only at lengths `i` present in `ν^{(a)}`.
    pub fn is_admissible_on_strings(&self, s: usize) -> bool {
        (1..self.n).all(|a| self.level(a).parts().iter().all(|&i| self.vacancy(a, i) + shift(a, s, i) >= 0))
    }
}

/// `δ_{a,s} i`, with `s = 0` meaning no shift.
pub fn shift(a: usize, s: usize, i: usize) -> i64 {
    if s != 0 && a == s {
        i as i64
    } else {
        0
    }
}

/// Level sizes `|ν^{(a)}| = Σ_{b>a} target_b` for `a = 1, …, n−1`.
pub fn level_sizes(target: &[usize], n: usize) -> Vec<usize> {
    (1..n).map(|a| target.iter().skip(a).sum()).collect()
}

/// Every tuple of partitions with the given sizes.
pub fn configurations(mu: &Partition, n: usize, sizes: &[usize]) -> Vec<Configuration> {
    let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
    for &k in sizes {
        let parts = Partition::all(k);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                parts.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(|nu| Configuration::new(mu.clone(), n, nu)).collect()
}
