//! Backtracking search for maps `θ: X → Y` commuting with a family of
//! operators, `θ(op·x) = op·θ(x)`.
//!
//! Assigning one point fixes its whole orbit, so candidates are only tried on
//! points not already reached. Every attempted assignment counts against the
//! evaluation cap.

use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;

const NONE: usize = usize::MAX;

type Act<'a> = Box<dyn Fn(usize, usize) -> usize + 'a>;
type Allow<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;
type Pairwise<'a> = Box<dyn Fn(usize, usize, usize, usize) -> bool + 'a>;
type Accept<'a> = Box<dyn Fn(&[usize]) -> bool + 'a>;

pub struct EquivariantSearch<'a> {
    src_size: usize,
    dst_size: usize,
    ops: usize,
    src_act: Act<'a>,
    dst_act: Act<'a>,
    allow: Option<Allow<'a>>,
    pairwise: Option<Pairwise<'a>>,
    accept: Option<Accept<'a>>,
    cap: u64,
}

struct State {
    assign: Vec<usize>,
    trail: Vec<usize>,
    evaluations: u64,
}

impl<'a> EquivariantSearch<'a> {
    /// `src_act(op, x)` and `dst_act(op, y)` for `op` in `0..ops`.
    pub fn new(
        src_size: usize,
        dst_size: usize,
        ops: usize,
        src_act: impl Fn(usize, usize) -> usize + 'a,
        dst_act: impl Fn(usize, usize) -> usize + 'a,
    ) -> Self {
        EquivariantSearch {
            src_size,
            dst_size,
            ops,
            src_act: Box::new(src_act),
            dst_act: Box::new(dst_act),
            allow: None,
            pairwise: None,
            accept: None,
            cap: DEFAULT_SEARCH_CAP,
        }
    }

    /// Restricts the image of each point: `allow(x, y)`.
    pub fn allow(mut self, f: impl Fn(usize, usize) -> bool + 'a) -> Self {
        self.allow = Some(Box::new(f));
        self
    }

    /// A condition on two assigned points, `f(x, θx, w, θw)`, checked as soon
    /// as both are assigned (in both orders).
    pub fn pairwise(mut self, f: impl Fn(usize, usize, usize, usize) -> bool + 'a) -> Self {
        self.pairwise = Some(Box::new(f));
        self
    }

    /// A final condition on complete maps.
    pub fn accept(mut self, f: impl Fn(&[usize]) -> bool + 'a) -> Self {
        self.accept = Some(Box::new(f));
        self
    }

    pub fn cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// All solutions in lexicographic order.
    pub fn run(&self) -> Result<Vec<Vec<usize>>> {
        let mut st = State { assign: vec![NONE; self.src_size], trail: Vec::new(), evaluations: 0 };
        let mut out = Vec::new();
        self.dfs(&mut st, &mut out)?;
        out.sort();
        Ok(out)
    }

    /// Number of solutions, without keeping them.
    pub fn count(&self) -> Result<usize> {
        Ok(self.run()?.len())
    }

    fn allowed(&self, x: usize, y: usize) -> bool {
        self.allow.as_ref().map_or(true, |f| f(x, y))
    }

    fn dfs(&self, st: &mut State, out: &mut Vec<Vec<usize>>) -> Result<()> {
        let Some(x) = st.assign.iter().position(|&v| v == NONE) else {
            if self.accept.as_ref().map_or(true, |f| f(&st.assign)) {
                out.push(st.assign.clone());
            }
            return Ok(());
        };
        for y in 0..self.dst_size {
            let mark = st.trail.len();
            if self.propagate(st, x, y)? {
                self.dfs(st, out)?;
            }
            while st.trail.len() > mark {
                let u = st.trail.pop().unwrap();
                st.assign[u] = NONE;
            }
        }
        Ok(())
    }

    fn try_assign(&self, st: &mut State, u: usize, v: usize) -> Result<bool> {
        st.evaluations += 1;
        if st.evaluations > self.cap {
            return Err(Error::SearchCapExceeded { cap: self.cap });
        }
        if !self.allowed(u, v) {
            return Ok(false);
        }
        if let Some(f) = &self.pairwise {
            for &w in &st.trail {
                let tw = st.assign[w];
                if !f(u, v, w, tw) || !f(w, tw, u, v) {
                    return Ok(false);
                }
            }
            if !f(u, v, u, v) {
                return Ok(false);
            }
        }
        st.assign[u] = v;
        st.trail.push(u);
        Ok(true)
    }

    fn propagate(&self, st: &mut State, x: usize, y: usize) -> Result<bool> {
        if !self.try_assign(st, x, y)? {
            return Ok(false);
        }
        let mut queue = vec![(x, y)];
        while let Some((u, v)) = queue.pop() {
            for op in 0..self.ops {
                let (u2, v2) = ((self.src_act)(op, u), (self.dst_act)(op, v));
                match st.assign[u2] {
                    NONE => {
                        if !self.try_assign(st, u2, v2)? {
                            return Ok(false);
                        }
                        queue.push((u2, v2));
                    }
                    w if w != v2 => return Ok(false),
                    _ => {}
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_endomorphisms() {
        // Z4 acting on itself by translation: equivariant maps are translations
        let s = EquivariantSearch::new(4, 4, 4, |g, x| (g + x) % 4, |g, y| (g + y) % 4);
        let homs = s.run().unwrap();
        assert_eq!(homs.len(), 4);
        assert_eq!(homs[1], vec![1, 2, 3, 0]);
    }

    #[test]
    fn quotient_maps() {
        // Z4 → Z2 equivariant for g ↦ g mod 2
        let s = EquivariantSearch::new(4, 2, 4, |g, x| (g + x) % 4, |g, y| (g + y) % 2);
        assert_eq!(s.count().unwrap(), 2);
        let s = EquivariantSearch::new(2, 4, 4, |g, x| (g + x) % 2, |g, y| (g + y) % 4);
        assert_eq!(s.count().unwrap(), 0);
    }

    #[test]
    fn filters_and_cap() {
        let all = EquivariantSearch::new(3, 3, 0, |_, x| x, |_, y| y);
        assert_eq!(all.count().unwrap(), 27);
        let injective = EquivariantSearch::new(3, 3, 0, |_, x| x, |_, y| y)
            .pairwise(|x, tx, w, tw| x == w || tx != tw);
        assert_eq!(injective.count().unwrap(), 6);
        let fixed = EquivariantSearch::new(3, 3, 0, |_, x| x, |_, y| y).allow(|x, y| x == y);
        assert_eq!(fixed.run().unwrap(), vec![vec![0, 1, 2]]);
        let capped = EquivariantSearch::new(3, 3, 0, |_, x| x, |_, y| y).cap(5);
        assert!(matches!(capped.run(), Err(Error::SearchCapExceeded { cap: 5 })));
    }
}
