use std::collections::VecDeque;

/// Residual network for integral max-flow with small capacities. Arcs are
/// stored in pairs so that `a ^ 1` is the reverse of arc `a`.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    out: Vec<Vec<usize>>,
    head: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            out: vec![Vec::new(); nodes],
            head: Vec::new(),
            cap: Vec::new(),
        }
    }

    /// Arc `from -> to` with capacity `forward`; its partner carries `backward`.
    pub(crate) fn add_arc_pair(&mut self, from: usize, to: usize, forward: u32, backward: u32) {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(forward);
        self.out[from].push(id);
        self.head.push(from);
        self.cap.push(backward);
        self.out[to].push(id + 1);
    }

    /// Maximum `source -> sink` flow, stopping early once `limit` is reached.
    /// Consumes the residual capacities.
    pub(crate) fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        let mut parent_arc = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent_arc.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            queue.push_back(source);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.out[u] {
                    let w = self.head[a];
                    if self.cap[a] > 0 && w != source && parent_arc[w] == usize::MAX {
                        parent_arc[w] = a;
                        if w == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut bottleneck = u32::MAX;
            let mut v = sink;
            while v != source {
                let a = parent_arc[v];
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.head[a ^ 1];
            }
            let push = bottleneck.min(limit - flow);
            let mut v = sink;
            while v != source {
                let a = parent_arc[v];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                v = self.head[a ^ 1];
            }
            flow += push;
        }
        flow
    }
}
