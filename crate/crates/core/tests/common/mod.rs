//! Independent reference implementations used as test oracles. None of
//! them call into the library's search, detection or canonical code.

#![allow(dead_code)]

/// Adjacency matrix of a labelled graph.
pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &eqdeg::Graph) -> Matrix {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn degrees(m: &Matrix) -> Vec<usize> {
    m.iter().map(|row| row.iter().filter(|&&b| b).count()).collect()
}

/// Every simple path with `len` edges, as vertex lists, in DFS order.
pub fn all_paths(m: &Matrix, len: usize) -> Vec<Vec<usize>> {
    fn extend(m: &Matrix, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() == len + 1 {
            out.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        for w in 0..m.len() {
            if m[last][w] && !path.contains(&w) {
                path.push(w);
                extend(m, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..m.len() {
        extend(m, len, &mut vec![s], &mut out);
    }
    out
}

/// Whether some simple path with `len` edges joins two equal-degree vertices.
pub fn naive_has_path(m: &Matrix, len: usize) -> bool {
    let d = degrees(m);
    all_paths(m, len).iter().any(|p| d[p[0]] == d[p[len]])
}

/// Whether some simple path with `len` edges runs from `u` to `v`.
pub fn naive_path_between(m: &Matrix, len: usize, u: usize, v: usize) -> bool {
    all_paths(m, len).iter().any(|p| p[0] == u && p[len] == v)
}

/// Whether `path` is a simple path in `m` with equal-degree endpoints.
pub fn valid_witness(m: &Matrix, path: &[usize], len: usize) -> bool {
    let d = degrees(m);
    path.len() == len + 1
        && path.iter().all(|&v| v < m.len())
        && (0..path.len()).all(|i| !path[..i].contains(&path[i]))
        && path.windows(2).all(|w| m[w[0]][w[1]])
        && d[path[0]] == d[path[len]]
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Unordered pairs of `0..n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Number of isomorphism classes of `n`-vertex graphs with each edge count,
/// by Burnside's lemma: average over all permutations of the number of
/// edge sets they fix, counted by size through the cycle structure the
/// permutation induces on vertex pairs.
pub fn burnside_census(n: usize) -> Vec<u128> {
    let pr = pairs(n);
    let m = pr.len();
    let index = |a: usize, b: usize| pr.iter().position(|&(x, y)| (x, y) == (a.min(b), a.max(b))).unwrap();
    let perms = permutations(n);
    let mut total = vec![0u128; m + 1];
    for p in &perms {
        let mut seen = vec![false; m];
        let mut poly = vec![0u128; m + 1];
        poly[0] = 1;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                len += 1;
                let (a, b) = pr[k];
                k = index(p[a], p[b]);
            }
            for e in (len..=m).rev() {
                poly[e] += poly[e - len];
            }
        }
        for e in 0..=m {
            total[e] += poly[e];
        }
    }
    total.into_iter().map(|t| t / perms.len() as u128).collect()
}

/// Lexicographically smallest upper-triangle bit string over all
/// relabellings: a canonical form by exhaustion.
pub fn brute_canonical(m: &Matrix, perms: &[Vec<usize>]) -> u64 {
    let pr = pairs(m.len());
    perms.iter().map(|p| pr.iter().fold(0u64, |acc, &(i, j)| acc << 1 | m[p[i]][p[j]] as u64)).min().unwrap_or(0)
}

/// Number of automorphisms by exhaustion.
pub fn brute_aut(m: &Matrix, perms: &[Vec<usize>]) -> u64 {
    let n = m.len();
    perms.iter().filter(|p| (0..n).all(|i| (0..n).all(|j| m[i][j] == m[p[i]][p[j]]))).count() as u64
}

/// Every labelled graph on `n` vertices, as adjacency matrices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Matrix> {
    let pr = pairs(n);
    (0u64..1 << pr.len()).map(move |mask| {
        let mut m = vec![vec![false; n]; n];
        for (k, &(i, j)) in pr.iter().enumerate() {
            if mask >> k & 1 == 1 {
                m[i][j] = true;
                m[j][i] = true;
            }
        }
        m
    })
}

/// All isomorphism classes on `v` vertices from the library's enumerator.
pub fn classes(v: usize) -> Vec<eqdeg::Graph> {
    let mut out = Vec::new();
    eqdeg::enumerator::enumerate_graphs(v, (0, v * v.saturating_sub(1) / 2), |g| out.push(g.clone())).unwrap();
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
