//! Small union-find shared by the graph and plane-tree routines.

#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    /// Returns false if `x` and `y` were already connected.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.components -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracks_components_and_cycles() {
        let mut dsu = Dsu::new(4);
        assert_eq!(dsu.components(), 4);
        assert!(dsu.union(0, 1));
        assert!(dsu.union(2, 3));
        assert_eq!(dsu.components(), 2);
        assert!(!dsu.union(1, 0), "repeated union reports a cycle");
        assert!(dsu.union(1, 2));
        assert_eq!(dsu.components(), 1);
        assert_eq!(dsu.find(0), dsu.find(3));
    }
}
