use super::Graph;

impl Graph {
    /// The k-path: a path with `k` edges and `k + 1` vertices.
    pub fn path(k: usize) -> Graph {
        let mut g = Graph::new(k + 1);
        for v in 0..k {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n - 1);
        g.add_edge(0, n - 1);
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{s,t}` with parts `0..s` and `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Graph {
        let mut g = Graph::new(s + t);
        for u in 0..s {
            for v in s..s + t {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{1,t}` with center 0.
    pub fn star(t: usize) -> Graph {
        Graph::complete_bipartite(1, t)
    }

    /// Claw whose three legs are paths with `a`, `b` and `c` edges; center 0.
    pub fn subdivided_claw(a: usize, b: usize, c: usize) -> Graph {
        let mut g = Graph::new(1 + a + b + c);
        let mut next = 1;
        for len in [a, b, c] {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }
}
