//! Independent oracles and random graph generators shared by the
//! integration tests. Nothing here calls the library's verifier, solver or
//! isomorphism code.
#![allow(dead_code)]

use mvd::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.adjacent(u, v)).collect()).collect()
}

/// Does removing `blocked` (a bitmask) leave `x` and `y` disconnected?
pub fn bfs_separates(adj: &[Vec<bool>], blocked: u64, x: usize, y: usize) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![x];
    seen[x] = true;
    while let Some(u) = stack.pop() {
        if u == y {
            return false;
        }
        for w in 0..n {
            if adj[u][w] && !seen[w] && blocked >> w & 1 == 0 {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

/// MVD check by enumerating every nonempty subset of `V - {x, y}`.
pub fn oracle_is_mvd(adj: &[Vec<bool>], colors: &[u32]) -> bool {
    let n = adj.len();
    for x in 0..n {
        for y in x + 1..n {
            if adj[x][y] {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
            let found = (1u64..1 << rest.len()).any(|sub| {
                let members: Vec<usize> = (0..rest.len()).filter(|i| sub >> i & 1 == 1).map(|i| rest[i]).collect();
                let c = colors[members[0]];
                if members.iter().any(|&v| colors[v] != c) {
                    return false;
                }
                let mask = members.iter().fold(0u64, |m, &v| m | 1 << v);
                bfs_separates(adj, mask, x, y)
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// All set partitions of `0..n`, as class labels starting at 1.
pub fn all_partitions(n: usize) -> Vec<Vec<u32>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for c in 1..=max + 1 {
            cur.push(c);
            rec(i + 1, n, cur, max.max(c), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// `mvd` by trying every set partition against [`oracle_is_mvd`].
pub fn oracle_mvd(g: &Graph) -> usize {
    let adj = adjacency(g);
    all_partitions(g.order())
        .into_iter()
        .filter(|p| oracle_is_mvd(&adj, p))
        .map(|p| *p.iter().max().unwrap() as usize)
        .max()
        .unwrap()
}

pub fn oracle_connected(adj: &[Vec<bool>]) -> bool {
    adj.is_empty() || bfs_reach_count(adj, 0) == adj.len()
}

fn bfs_reach_count(adj: &[Vec<bool>], s: usize) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![s];
    seen[s] = true;
    let mut count = 0;
    while let Some(u) = stack.pop() {
        count += 1;
        for w in 0..n {
            if adj[u][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    count
}

/// Cut vertices by deleting each vertex in turn.
pub fn oracle_cut_vertices(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    (0..n)
        .filter(|&v| {
            let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            if rest.len() < 2 {
                return false;
            }
            let sub: Vec<Vec<bool>> = rest.iter().map(|&a| rest.iter().map(|&b| adj[a][b]).collect()).collect();
            !oracle_connected(&sub)
        })
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Upper-triangle adjacency bits under `perm` (vertex `v` moved to `perm[v]`).
fn bits_under(adj: &[Vec<bool>], perm: &[usize]) -> u64 {
    let n = adj.len();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut bits = 0u64;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[inv[i]][inv[j]] {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

/// Brute-force canonical key: the minimum bit string over all relabelings.
pub fn brute_key(adj: &[Vec<bool>], perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| bits_under(adj, p)).min().unwrap()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let aa = adjacency(a);
    let bb = adjacency(b);
    perms.iter().any(|p| (0..a.order()).all(|u| (0..a.order()).all(|v| aa[u][v] == bb[p[u]][p[v]])))
}

/// Graph on `n` vertices from the upper-triangle bit string `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> k & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

/// Every connected graph of order `n`, one per isomorphism class.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let m = n * (n - 1) / 2;
    let mut keys = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for code in 0u64..1 << m {
        let g = graph_from_code(n, code);
        let adj = adjacency(&g);
        if !oracle_connected(&adj) {
            continue;
        }
        if keys.insert(brute_key(&adj, &perms)) {
            out.push(g);
        }
    }
    out
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    g.permuted(&random_permutation(rng, n))
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = random_tree(rng, n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn fresh_label(g: &Graph) -> String {
    let mut i = g.order() + 1;
    loop {
        let l = format!("x{i}");
        if g.vertex(&l).is_err() {
            return l;
        }
        i += 1;
    }
}

/// Glues a copy of `block` onto `g`, identifying `block`'s vertex `b` with
/// `g`'s vertex `at`.
pub fn attach(g: &mut Graph, at: Vertex, block: &Graph, b: Vertex) {
    let mut image = vec![usize::MAX; block.order()];
    image[b] = at;
    for v in block.vertices() {
        if v != b {
            let l = fresh_label(g);
            image[v] = g.add_vertex(&l).unwrap();
        }
    }
    for (u, v) in block.edges() {
        g.add_edge(image[u], image[v]).unwrap();
    }
}

pub fn add_pendants(rng: &mut impl Rng, g: &mut Graph, k: usize) {
    for _ in 0..k {
        let at = rng.gen_range(0..g.order());
        attach(g, at, &Graph::path(2), 0);
    }
}

/// Counts of a graph built by gluing blocks together.
#[derive(Clone, Copy, Debug, Default)]
pub struct Glued {
    pub n: usize,
    pub r: usize,
    pub t: usize,
}

/// Builds a connected graph by repeatedly gluing one of `pieces` (or `K2`
/// with probability `p_edge`) at a random vertex. Returns the graph and
/// the block counts implied by the construction.
pub fn glue_random(rng: &mut impl Rng, pieces: &[Graph], steps: usize, p_edge: f64) -> (Graph, Glued) {
    let mut g = Graph::empty(1);
    let mut counts = Glued { n: 1, r: 0, t: 0 };
    for _ in 0..steps {
        let at = rng.gen_range(0..g.order());
        if pieces.is_empty() || rng.gen_bool(p_edge) {
            attach(&mut g, at, &Graph::path(2), 0);
            counts.t += 1;
            counts.n += 1;
        } else {
            let piece = &pieces[rng.gen_range(0..pieces.len())];
            let b = rng.gen_range(0..piece.order());
            attach(&mut g, at, piece, b);
            counts.n += piece.order() - 1;
        }
        counts.r += 1;
    }
    (g, counts)
}
