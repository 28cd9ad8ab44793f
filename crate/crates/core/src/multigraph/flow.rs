use std::collections::VecDeque;

/// Unit-capacity flow network solved with shortest augmenting paths.
///
/// Arcs are stored in pairs: arc `2k` and arc `2k + 1` are each other's
/// residual partner. An undirected edge is a pair with capacity 1 both ways.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowResult {
    pub value: usize,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    pub(crate) fn node_count(&self) -> usize {
        self.adj.len()
    }

    fn push_pair(&mut self, u: usize, v: usize, forward: u32, backward: u32) {
        let k = self.head.len();
        self.head.push(v);
        self.cap.push(forward);
        self.adj[u].push(k);
        self.head.push(u);
        self.cap.push(backward);
        self.adj[v].push(k + 1);
    }

    pub(crate) fn add_undirected(&mut self, u: usize, v: usize) {
        if u != v {
            self.push_pair(u, v, 1, 1);
        }
    }

    pub(crate) fn add_directed(&mut self, u: usize, v: usize) {
        if u != v {
            self.push_pair(u, v, 1, 0);
        }
    }

    /// Maximum flow from `s` to `t`, stopping early once `limit` is reached.
    pub(crate) fn max_flow(&self, s: usize, t: usize, limit: usize) -> FlowResult {
        let n = self.node_count();
        let mut cap = self.cap.clone();
        let mut value = 0;
        let mut pred = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        loop {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut seen = vec![false; n];
            seen[s] = true;
            queue.clear();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = a;
                        if y == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                return FlowResult {
                    value,
                    source_side: seen,
                };
            }
            let mut y = t;
            while y != s {
                let a = pred[y];
                cap[a] -= 1;
                cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            value += 1;
            if value >= limit {
                // Residual side is meaningless after an early stop; report what
                // is reachable now for callers that only need the value.
                return FlowResult {
                    value,
                    source_side: residual_reach(&self.head, &self.adj, &cap, s),
                };
            }
        }
    }
}

fn residual_reach(head: &[usize], adj: &[Vec<usize>], cap: &[u32], s: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for &a in &adj[x] {
            if cap[a] > 0 && !seen[head[a]] {
                seen[head[a]] = true;
                stack.push(head[a]);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undirected_parallel_edges() {
        let mut net = FlowNetwork::new(2);
        for _ in 0..5 {
            net.add_undirected(0, 1);
        }
        assert_eq!(net.max_flow(0, 1, usize::MAX).value, 5);
        assert_eq!(net.max_flow(1, 0, usize::MAX).value, 5);
        assert_eq!(net.max_flow(0, 1, 2).value, 2);
    }

    #[test]
    fn directed_respects_orientation() {
        let mut net = FlowNetwork::new(3);
        net.add_directed(0, 1);
        net.add_directed(1, 2);
        net.add_directed(2, 0);
        assert_eq!(net.max_flow(0, 2, usize::MAX).value, 1);
        let mut path = FlowNetwork::new(3);
        path.add_directed(0, 1);
        path.add_directed(1, 2);
        assert_eq!(path.max_flow(2, 0, usize::MAX).value, 0);
        let r = path.max_flow(2, 0, usize::MAX);
        assert_eq!(r.source_side, vec![false, false, true]);
    }
}
