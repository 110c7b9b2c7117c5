use std::collections::HashMap;

/// Crystallographic root system in simple-root coordinates.
///
/// Roots `0..n_pos` are positive; root `i + n_pos` is the negative of root `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    /// `refl[s][i]` is the index of `s(root_i)`.
    refl: Vec<Vec<u32>>,
}

impl RootSystem {
    /// Cartan convention: `s_i(a_j) = a_j - cartan[i][j] a_i`.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Self {
        let rank = cartan.len();
        let reflect = |i: usize, v: &[i64]| -> Vec<i64> {
            let pair: i64 = (0..rank).map(|j| cartan[i][j] * v[j]).sum();
            let mut out = v.to_vec();
            out[i] -= pair;
            out
        };
        let mut pos: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut index: HashMap<Vec<i64>, usize> =
            pos.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut k = 0;
        while k < pos.len() {
            for i in 0..rank {
                let img = reflect(i, &pos[k]);
                if img.iter().all(|&c| c >= 0) && !index.contains_key(&img) {
                    index.insert(img.clone(), pos.len());
                    pos.push(img);
                }
            }
            k += 1;
        }
        // Stable order: by height, then lexicographic.
        pos.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let refl = (0..rank)
            .map(|i| roots.iter().map(|r| index[&reflect(i, r)] as u32).collect())
            .collect();
        Self { rank, cartan, roots, n_pos, index, refl }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.n_pos]
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn simple_index(&self, s: usize) -> usize {
        self.index[&(0..self.rank).map(|j| i64::from(j == s)).collect::<Vec<_>>()]
    }

    /// Index of `s(root_i)`.
    pub fn reflect(&self, s: usize, i: usize) -> usize {
        self.refl[s][i] as usize
    }

    /// Action matrix of `s` (row-major; column `j` is `s(a_j)`).
    pub fn reflection_matrix(&self, s: usize) -> Vec<i64> {
        let r = self.rank;
        let mut m = vec![0; r * r];
        for j in 0..r {
            m[j * r + j] = 1;
            m[s * r + j] -= self.cartan[s][j];
        }
        m
    }
}

fn chain_cartan(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

pub(crate) fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    chain_cartan(n)
}

/// Short simple root last.
pub(crate) fn cartan_b(n: usize) -> Vec<Vec<i64>> {
    let mut c = chain_cartan(n);
    if n >= 2 {
        c[n - 2][n - 1] = -1;
        c[n - 1][n - 2] = -2;
    }
    c
}

/// Long simple root last.
pub(crate) fn cartan_c(n: usize) -> Vec<Vec<i64>> {
    let mut c = chain_cartan(n);
    if n >= 2 {
        c[n - 2][n - 1] = -2;
        c[n - 1][n - 2] = -1;
    }
    c
}

/// Last node attached to the third-to-last.
pub(crate) fn cartan_d(n: usize) -> Vec<Vec<i64>> {
    let mut c = chain_cartan(n);
    c[n - 2][n - 1] = 0;
    c[n - 1][n - 2] = 0;
    c[n - 3][n - 1] = -1;
    c[n - 1][n - 3] = -1;
    c
}

/// Bourbaki labelling: 1-3-4-5-..., with 2 attached to 4.
pub(crate) fn cartan_e(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    let mut edge = |a: usize, b: usize| {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    edge(1, 3);
    edge(2, 4);
    for k in 3..n {
        edge(k, k + 1);
    }
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    c
}

pub(crate) fn cartan_f4() -> Vec<Vec<i64>> {
    let mut c = chain_cartan(4);
    c[1][2] = -1;
    c[2][1] = -2;
    c
}

pub(crate) fn cartan_g2() -> Vec<Vec<i64>> {
    vec![vec![2, -3], vec![-1, 2]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        for n in 1..=6 {
            assert_eq!(RootSystem::from_cartan(cartan_a(n)).num_positive(), n * (n + 1) / 2);
        }
        for n in 2..=5 {
            assert_eq!(RootSystem::from_cartan(cartan_b(n)).num_positive(), n * n);
            assert_eq!(RootSystem::from_cartan(cartan_c(n)).num_positive(), n * n);
        }
        for n in 3..=6 {
            assert_eq!(RootSystem::from_cartan(cartan_d(n)).num_positive(), n * (n - 1));
        }
        assert_eq!(RootSystem::from_cartan(cartan_g2()).num_positive(), 6);
        assert_eq!(RootSystem::from_cartan(cartan_f4()).num_positive(), 24);
        assert_eq!(RootSystem::from_cartan(cartan_e(6)).num_positive(), 36);
        assert_eq!(RootSystem::from_cartan(cartan_e(7)).num_positive(), 63);
        assert_eq!(RootSystem::from_cartan(cartan_e(8)).num_positive(), 120);
    }

    #[test]
    fn simple_reflection_permutes_the_rest() {
        let rs = RootSystem::from_cartan(cartan_f4());
        for s in 0..4 {
            let a = rs.simple_index(s);
            for i in 0..rs.num_positive() {
                let j = rs.reflect(s, i);
                if i == a {
                    assert!(!rs.is_positive(j));
                } else {
                    assert!(rs.is_positive(j));
                }
                assert_eq!(rs.reflect(s, j), i);
            }
        }
    }
}
