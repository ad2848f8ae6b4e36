use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{Point, WeightedArrangement};
use crate::exact::GaussianRational;

/// An intersection point together with the lines through it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Vertex {
    pub point: Point,
    /// `I_v`, sorted line indices.
    pub incident: Vec<usize>,
    /// `m_v = |I_v|`.
    pub multiplicity: usize,
    /// `d(I_v) = Σ_{m ∈ I_v} e_m`.
    pub weight_sum: u64,
}

/// A maximal family of parallel lines, i.e. one point `A_j` at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DirectionClass {
    pub direction: (GaussianRational, GaussianRational),
    pub members: Vec<usize>,
    /// `k_j`
    pub count: usize,
    /// `d_j`
    pub weight_sum: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CombinatorialSummary {
    pub d: usize,
    pub d_e: u64,
    pub weights: Vec<u64>,
    /// Sorted lexicographically by coordinates.
    pub vertices: Vec<Vertex>,
    /// Sorted by canonical direction.
    pub directions: Vec<DirectionClass>,
    /// `n_m`: number of vertices of multiplicity `m`.
    pub histogram: BTreeMap<usize, usize>,
    /// `v_j`: number of vertices on line `j`.
    pub line_vertex_counts: Vec<usize>,
}

/// Exact vertices, direction classes and incidence counts.
pub fn compute_combinatorics(arr: &WeightedArrangement) -> CombinatorialSummary {
    let lines = arr.lines();
    let weights = arr.weights();
    let d = lines.len();

    let mut points: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                let set = points.entry(p).or_default();
                set.insert(i);
                set.insert(j);
            }
        }
    }

    let mut line_vertex_counts = vec![0; d];
    let mut histogram = BTreeMap::new();
    let vertices: Vec<Vertex> = points
        .into_iter()
        .map(|(point, incident)| {
            debug_assert!(incident.iter().all(|&i| lines[i].contains(&point)));
            let incident: Vec<usize> = incident.into_iter().collect();
            for &i in &incident {
                line_vertex_counts[i] += 1;
            }
            *histogram.entry(incident.len()).or_insert(0) += 1;
            Vertex {
                weight_sum: incident.iter().map(|&i| weights[i]).sum(),
                multiplicity: incident.len(),
                incident,
                point,
            }
        })
        .collect();

    let mut classes: BTreeMap<(GaussianRational, GaussianRational), Vec<usize>> = BTreeMap::new();
    for (i, l) in lines.iter().enumerate() {
        classes.entry(l.direction()).or_default().push(i);
    }
    let directions = classes
        .into_iter()
        .map(|(direction, members)| DirectionClass {
            direction,
            count: members.len(),
            weight_sum: members.iter().map(|&i| weights[i]).sum(),
            members,
        })
        .collect();

    CombinatorialSummary {
        d,
        d_e: weights.iter().sum(),
        weights: weights.to_vec(),
        vertices,
        directions,
        histogram,
        line_vertex_counts,
    }
}

impl CombinatorialSummary {
    /// Number of direction classes.
    pub fn p(&self) -> usize {
        self.directions.len()
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// `n_m`, zero when absent.
    pub fn n(&self, m: usize) -> usize {
        self.histogram.get(&m).copied().unwrap_or(0)
    }

    /// Only double points.
    pub fn is_normal_crossing(&self) -> bool {
        self.histogram.keys().all(|&m| m == 2)
    }

    /// `χ(H_j⁰) = 1 - v_j`.
    pub fn open_line_euler(&self, j: usize) -> i64 {
        1 - self.line_vertex_counts[j] as i64
    }

    /// Same geometry with the weights replaced. The weights are not required
    /// to have gcd 1, which lets local-system residues play their role.
    pub fn reweighted(&self, weights: &[u64]) -> Self {
        assert_eq!(weights.len(), self.d, "one weight per line");
        let mut out = self.clone();
        out.weights = weights.to_vec();
        out.d_e = weights.iter().sum();
        for v in &mut out.vertices {
            v.weight_sum = v.incident.iter().map(|&i| weights[i]).sum();
        }
        for c in &mut out.directions {
            c.weight_sum = c.members.iter().map(|&i| weights[i]).sum();
        }
        out
    }

    /// `Σ_j v_j`, `Σ_v m_v` and `Σ_m m·n_m`, which must coincide.
    pub fn incidence_counts(&self) -> (usize, usize, usize) {
        (
            self.line_vertex_counts.iter().sum(),
            self.vertices.iter().map(|v| v.multiplicity).sum(),
            self.histogram.iter().map(|(m, n)| m * n).sum(),
        )
    }

    /// Direction classes partition the line indices, with `Σ k_j = d` and
    /// `Σ d_j = d_e`.
    pub fn is_partition(&self) -> bool {
        let mut seen = vec![false; self.d];
        for c in &self.directions {
            if c.members.is_empty() || c.count != c.members.len() {
                return false;
            }
            for &i in &c.members {
                if i >= self.d || std::mem::replace(&mut seen[i], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
            && self.directions.iter().map(|c| c.count).sum::<usize>() == self.d
            && self.directions.iter().map(|c| c.weight_sum).sum::<u64>() == self.d_e
    }
}
