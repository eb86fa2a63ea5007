//! Named graph families and seeded random graphs.
//!
//! `cube_q3` and even prisms are 3-regular, bipartite and planar by
//! construction; they are the instance class on which counting vertex
//! covers stays #P-complete.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

/// Upper bound on the vertex count of any generated family member.
pub const MAX_FAMILY_VERTICES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Path on `size` vertices.
    Path,
    /// Cycle on `size >= 3` vertices.
    Cycle,
    /// `K_size`.
    Complete,
    /// `K_{size,size}`.
    CompleteBipartite,
    /// `K_{1,size}`: one centre and `size` leaves.
    Star,
    /// 3-dimensional hypercube; `size` is ignored.
    CubeQ3,
    /// `C_size x K_2`, `size` even and at least 4.
    Prism,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::CubeQ3,
        Family::Prism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::CubeQ3 => "cube_q3",
            Family::Prism => "prism",
        }
    }

    /// Whether the family takes a size argument.
    pub fn is_sized(self) -> bool {
        self != Family::CubeQ3
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown graph family {0:?} (expected one of path, cycle, complete, complete_bipartite, star, cube_q3, prism)")]
    UnknownFamily(String),
    #[error("invalid size {size} for {family}: {reason}")]
    InvalidSize {
        family: Family,
        size: usize,
        reason: &'static str,
    },
}

/// Builds the named family member.
pub fn gen_family(family: Family, size: usize) -> Result<Graph, FamilyError> {
    let bad = |reason| FamilyError::InvalidSize {
        family,
        size,
        reason,
    };
    let vertices = match family {
        Family::Path | Family::Cycle | Family::Complete => size,
        Family::CompleteBipartite | Family::Prism => size.saturating_mul(2),
        Family::Star => size.saturating_add(1),
        Family::CubeQ3 => 8,
    };
    if vertices > MAX_FAMILY_VERTICES {
        return Err(bad("too many vertices"));
    }

    let edges: Vec<(usize, usize)> = match family {
        Family::Path => {
            if size == 0 {
                return Err(bad("a path needs at least one vertex"));
            }
            (1..size).map(|i| (i - 1, i)).collect()
        }
        Family::Cycle => {
            if size < 3 {
                return Err(bad("a cycle needs at least three vertices"));
            }
            (0..size).map(|i| (i, (i + 1) % size)).collect()
        }
        Family::Complete => {
            if size == 0 {
                return Err(bad("a complete graph needs at least one vertex"));
            }
            (0..size)
                .flat_map(|u| (u + 1..size).map(move |v| (u, v)))
                .collect()
        }
        Family::CompleteBipartite => {
            if size == 0 {
                return Err(bad("each side needs at least one vertex"));
            }
            (0..size)
                .flat_map(|u| (0..size).map(move |v| (u, size + v)))
                .collect()
        }
        Family::Star => {
            if size == 0 {
                return Err(bad("a star needs at least one leaf"));
            }
            (1..=size).map(|v| (0, v)).collect()
        }
        Family::CubeQ3 => (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect(),
        Family::Prism => {
            if size < 4 || !size.is_multiple_of(2) {
                return Err(bad(
                    "prism size must be even and at least 4 to stay bipartite",
                ));
            }
            // Outer cycle 0..size, inner cycle size..2*size, spokes i -- size+i.
            (0..size)
                .flat_map(|i| {
                    let j = (i + 1) % size;
                    [(i, j), (size + i, size + j), (i, size + i)]
                })
                .collect()
        }
    };
    Ok(Graph::new(vertices, edges).expect("family constructions are simple graphs"))
}

/// G(n, p) graph: each pair `u < v` is included iff a uniform draw in `[0, 1)`
/// falls below `p`. Pairs are visited in canonical order, so the result depends
/// only on `(n, p, seed)`.
///
/// Panics if `p` is not in `[0, 1]`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability {p} outside [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(n, p, &mut rng)
}

pub(crate) fn random_graph_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("distinct canonical pairs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_properties;

    #[test]
    fn cube_q3_shape() {
        let g = gen_family(Family::CubeQ3, 0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        let r = check_properties(&g);
        assert_eq!(r.regular_degree, Some(3));
        assert!(r.is_bipartite);
        assert!(r.is_connected);
    }

    #[test]
    fn prism_six() {
        let g = gen_family(Family::Prism, 6).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 18));
        let r = check_properties(&g);
        assert_eq!(r.regular_degree, Some(3));
        assert!(r.is_bipartite);
    }

    #[test]
    fn even_prisms_stay_in_class() {
        for t in 2..20 {
            let g = gen_family(Family::Prism, 2 * t).unwrap();
            assert_eq!(g.edge_count(), 6 * t);
            let r = check_properties(&g);
            assert_eq!(r.regular_degree, Some(3));
            assert!(r.is_bipartite);
        }
    }

    #[test]
    fn odd_prism_rejected() {
        assert!(matches!(
            gen_family(Family::Prism, 5),
            Err(FamilyError::InvalidSize { size: 5, .. })
        ));
        assert!(gen_family(Family::Prism, 2).is_err());
    }

    #[test]
    fn triangle() {
        let g = gen_family(Family::Complete, 3).unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
    }

    #[test]
    fn small_families() {
        assert_eq!(gen_family(Family::Path, 4).unwrap().edge_count(), 3);
        assert_eq!(gen_family(Family::Path, 1).unwrap().edge_count(), 0);
        assert_eq!(gen_family(Family::Cycle, 5).unwrap().edge_count(), 5);
        assert_eq!(gen_family(Family::Star, 4).unwrap().vertex_count(), 5);
        let kb = gen_family(Family::CompleteBipartite, 3).unwrap();
        assert_eq!(kb.edge_count(), 9);
        assert!(check_properties(&kb).is_bipartite);
        assert!(gen_family(Family::Cycle, 2).is_err());
        assert!(gen_family(Family::Complete, MAX_FAMILY_VERTICES + 1).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!(matches!(
            "petersen".parse::<Family>(),
            Err(FamilyError::UnknownFamily(_))
        ));
    }

    #[test]
    fn random_extremes() {
        assert_eq!(random_graph(5, 0.0, 9).edge_count(), 0);
        assert_eq!(
            random_graph(4, 1.0, 9),
            gen_family(Family::Complete, 4).unwrap()
        );
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_graph(10, 0.3, 42), random_graph(10, 0.3, 42));
        assert_ne!(random_graph(10, 0.5, 1), random_graph(10, 0.5, 2));
    }
}
