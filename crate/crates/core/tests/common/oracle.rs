//! Independent reference computations: literal definitions, no pruning.

use restriction_core::SupportedAction;

/// All `n^k` maps `0..k → 0..n`, in lexicographic order.
pub fn all_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < n {
                break;
            }
            cur[i] = 0;
        }
    }
}

pub fn search_space(a: usize, b: usize) -> f64 {
    (b as f64).powi(a as i32)
}

fn leq(a: &SupportedAction<'_>, x: usize, y: usize) -> bool {
    a.act(a.support(x), y) == x
}

fn compat(a: &SupportedAction<'_>, x: usize, y: usize) -> bool {
    a.act(a.support(x), y) == a.act(a.support(y), x)
}

pub fn minimum(a: &SupportedAction<'_>) -> Option<usize> {
    (0..a.size()).find(|&x| (0..a.size()).all(|y| leq(a, x, y)))
}

pub fn join(a: &SupportedAction<'_>, x: usize, y: usize) -> Option<usize> {
    let ub: Vec<usize> = (0..a.size()).filter(|&u| leq(a, x, u) && leq(a, y, u)).collect();
    ub.iter().copied().find(|&u| ub.iter().all(|&v| leq(a, u, v)))
}

pub fn is_hom(a: &SupportedAction<'_>, b: &SupportedAction<'_>, f: &[usize]) -> bool {
    (0..a.size()).all(|x| b.support(f[x]) == a.support(x))
        && (0..a.lrm().size()).all(|s| (0..a.size()).all(|x| f[a.act(s, x)] == b.act(s, f[x])))
}

pub fn is_boolean_hom(a: &SupportedAction<'_>, b: &SupportedAction<'_>, f: &[usize]) -> bool {
    if !is_hom(a, b, f) {
        return false;
    }
    let min_ok = match (minimum(a), minimum(b)) {
        (Some(z), Some(z2)) => f[z] == z2,
        (None, _) => a.size() == 0,
        _ => false,
    };
    min_ok
        && (0..a.size()).all(|x| {
            (0..a.size()).all(|y| !compat(a, x, y) || join(a, x, y).map(|j| f[j]) == join(b, f[x], f[y]))
        })
}

/// `hom(A, B)` by filtering every map.
pub fn brute_force_homs(a: &SupportedAction<'_>, b: &SupportedAction<'_>, boolean: bool) -> Vec<Vec<usize>> {
    all_maps(a.size(), b.size())
        .into_iter()
        .filter(|f| if boolean { is_boolean_hom(a, b, f) } else { is_hom(a, b, f) })
        .collect()
}

/// Partial maps on `0..n` as `Vec<Option<usize>>`, composed left to right.
pub fn partial_maps(n: usize) -> Vec<Vec<Option<usize>>> {
    all_maps(n, n + 1)
        .into_iter()
        .map(|digits| digits.into_iter().map(|d| d.checked_sub(1)).collect())
        .collect()
}

pub fn compose(f: &[Option<usize>], g: &[Option<usize>]) -> Vec<Option<usize>> {
    f.iter().map(|x| x.and_then(|x| g[x])).collect()
}

pub fn domain(f: &[Option<usize>]) -> Vec<Option<usize>> {
    f.iter().enumerate().map(|(i, x)| x.map(|_| i)).collect()
}

pub fn injective(f: &[Option<usize>]) -> bool {
    let v: Vec<usize> = f.iter().flatten().copied().collect();
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
