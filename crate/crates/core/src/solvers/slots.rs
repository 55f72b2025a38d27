//! Slot assignment with single-cycle closure.
//!
//! Candidate links between nodes are distributed over interchangeable slots.
//! Each link end belongs to a port group of its node; a group admits a fixed
//! number of links per slot. Fixed links are present in every slot. A
//! solution makes every slot a single cycle through all nodes. Both the
//! line-graph decomposition search and the perfect Euler set search are
//! instances.

use super::Meter;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Link {
    pub a: usize,
    pub b: usize,
    pub group_a: usize,
    pub group_b: usize,
}

pub(crate) struct SlotProblem {
    pub nodes: usize,
    pub slots: usize,
    pub group_cap: Vec<u8>,
    pub links: Vec<Link>,
    pub fixed: Vec<(usize, usize)>,
}

const CLOSED: usize = usize::MAX;

struct State<'p> {
    p: &'p SlotProblem,
    assign: Vec<Option<usize>>,
    used: Vec<u8>,
    // per slot: other endpoint of the path ending at a node, and path size
    end: Vec<usize>,
    size: Vec<usize>,
    slots_opened: usize,
    group_links: Vec<Vec<usize>>,
}

enum Undo {
    End(usize, usize),
    Size(usize, usize),
}

impl SlotProblem {
    /// Slot of every link, or `None` when the tree was exhausted or the
    /// meter stopped the search (check `meter.exceeded`).
    pub fn solve(&self, meter: &mut Meter) -> Option<Vec<usize>> {
        if !meter.tick() {
            return None;
        }
        let mut group_links = vec![Vec::new(); self.group_cap.len()];
        for (k, l) in self.links.iter().enumerate() {
            group_links[l.group_a].push(k);
            group_links[l.group_b].push(k);
        }
        // every group must fill exactly `cap` in every slot
        let balanced = group_links
            .iter()
            .zip(&self.group_cap)
            .all(|(ls, &cap)| ls.len() == cap as usize * self.slots);
        if !balanced || self.slots == 0 {
            return None;
        }
        let n = self.nodes;
        let mut st = State {
            p: self,
            assign: vec![None; self.links.len()],
            used: vec![0; self.group_cap.len() * self.slots],
            end: (0..self.slots).flat_map(|_| 0..n).collect(),
            size: vec![1; n * self.slots],
            slots_opened: 0,
            group_links,
        };
        let mut log = Vec::new();
        for c in 0..self.slots {
            for &(a, b) in &self.fixed {
                if !st.join(c, a, b, &mut log) {
                    return None;
                }
            }
        }
        if st.search(meter) {
            Some(st.assign.into_iter().map(|c| c.unwrap()).collect())
        } else {
            None
        }
    }
}

impl State<'_> {
    fn idx(&self, c: usize, x: usize) -> usize {
        c * self.p.nodes + x
    }

    /// Whether joining `a` and `b` in slot `c` keeps every cycle Hamiltonian.
    fn closes_ok(&self, c: usize, a: usize, b: usize) -> bool {
        let ia = self.idx(c, a);
        if self.end[ia] == b {
            self.size[ia] == self.p.nodes
        } else {
            true
        }
    }

    fn join(&mut self, c: usize, a: usize, b: usize, log: &mut Vec<Undo>) -> bool {
        if !self.closes_ok(c, a, b) {
            return false;
        }
        let (ia, ib) = (self.idx(c, a), self.idx(c, b));
        if self.end[ia] == b {
            // closing the full cycle
            log.push(Undo::End(ia, self.end[ia]));
            log.push(Undo::End(ib, self.end[ib]));
            self.end[ia] = CLOSED;
            self.end[ib] = CLOSED;
            return true;
        }
        let (ea, eb) = (self.end[ia], self.end[ib]);
        let total = self.size[ia] + self.size[ib];
        let (iea, ieb) = (self.idx(c, ea), self.idx(c, eb));
        for i in [iea, ieb] {
            log.push(Undo::End(i, self.end[i]));
            log.push(Undo::Size(i, self.size[i]));
        }
        self.end[iea] = eb;
        self.end[ieb] = ea;
        self.size[iea] = total;
        self.size[ieb] = total;
        true
    }

    fn undo(&mut self, log: &mut Vec<Undo>) {
        while let Some(u) = log.pop() {
            match u {
                Undo::End(i, v) => self.end[i] = v,
                Undo::Size(i, v) => self.size[i] = v,
            }
        }
    }

    fn domain(&self, k: usize) -> u64 {
        let l = self.p.links[k];
        let s = self.p.slots;
        let limit = (self.slots_opened + 1).min(s);
        let mut mask = 0u64;
        for c in 0..limit {
            if self.used[l.group_a * s + c] < self.p.group_cap[l.group_a]
                && self.used[l.group_b * s + c] < self.p.group_cap[l.group_b]
                && self.closes_ok(c, l.a, l.b)
            {
                mask |= 1 << c;
            }
        }
        mask
    }

    /// Picks the open link with the fewest options, or reports a dead end.
    fn choose(&self) -> Choice {
        let s = self.p.slots;
        let mut best: Option<(u32, usize, u64)> = None;
        let mut supply = vec![0u32; self.used.len()];
        for k in 0..self.p.links.len() {
            if self.assign[k].is_some() {
                continue;
            }
            let d = self.domain(k);
            if d == 0 {
                return Choice::Dead;
            }
            let l = self.p.links[k];
            for c in 0..s {
                if d & (1 << c) != 0 {
                    supply[l.group_a * s + c] += 1;
                    supply[l.group_b * s + c] += 1;
                }
            }
            let cnt = d.count_ones();
            if best.is_none_or(|(b, _, _)| cnt < b) {
                best = Some((cnt, k, d));
            }
        }
        let Some((_, k, d)) = best else {
            return Choice::Complete;
        };
        // unopened slots are symmetric: only check opened ones for supply
        for g in 0..self.p.group_cap.len() {
            if self.group_links[g].iter().all(|&k| self.assign[k].is_some()) {
                continue;
            }
            for c in 0..self.slots_opened.min(s) {
                let need = self.p.group_cap[g] - self.used[g * s + c];
                if supply[g * s + c] < need as u32 {
                    return Choice::Dead;
                }
            }
        }
        Choice::Branch(k, d)
    }

    fn search(&mut self, meter: &mut Meter) -> bool {
        let (k, mask) = match self.choose() {
            Choice::Dead => return false,
            Choice::Complete => return true,
            Choice::Branch(k, d) => (k, d),
        };
        let s = self.p.slots;
        let l = self.p.links[k];
        for c in 0..s {
            if mask & (1 << c) == 0 {
                continue;
            }
            if !meter.tick() {
                return false;
            }
            let mut log = Vec::new();
            let opened = self.slots_opened;
            self.join(c, l.a, l.b, &mut log);
            self.assign[k] = Some(c);
            self.used[l.group_a * s + c] += 1;
            self.used[l.group_b * s + c] += 1;
            if c == self.slots_opened {
                self.slots_opened += 1;
            }
            if self.search(meter) {
                return true;
            }
            self.slots_opened = opened;
            self.used[l.group_a * s + c] -= 1;
            self.used[l.group_b * s + c] -= 1;
            self.assign[k] = None;
            self.undo(&mut log);
            if meter.exceeded {
                return false;
            }
        }
        false
    }
}

enum Choice {
    Dead,
    Complete,
    Branch(usize, u64),
}
