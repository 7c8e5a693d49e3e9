use crate::error::{Error, Result};
use crate::graph::Graph;

/// Degree assortativity: Pearson correlation of endpoint degrees over the
/// 2m ordered edge-endpoint pairs.
///
/// Computed from exact integer moments; with S_jk = Σ j·k, S_j = Σ (j + k)
/// and S_jj = Σ (j² + k²) over undirected edges,
/// r = (4m·S_jk − S_j²) / (2m·S_jj − S_j²).
pub fn assortativity(g: &Graph) -> Result<f64> {
    let (mut s_jk, mut s_j, mut s_jj) = (0i128, 0i128, 0i128);
    for (u, v) in g.edges() {
        let j = g.degree(u) as i128;
        let k = g.degree(v) as i128;
        s_jk += j * k;
        s_j += j + k;
        s_jj += j * j + k * k;
    }
    let m = g.edge_count() as i128;
    let den = 2 * m * s_jj - s_j * s_j;
    if m == 0 || den == 0 {
        return Err(Error::Undefined("degree assortativity"));
    }
    let num = 4 * m * s_jk - s_j * s_j;
    Ok(num as f64 / den as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn star_is_perfectly_disassortative() {
        assert_eq!(assortativity(&star(3)).unwrap(), -1.0);
    }

    #[test]
    fn path4() {
        assert_eq!(assortativity(&path(4)).unwrap(), -0.5);
    }

    #[test]
    fn regular_graph_is_undefined() {
        assert!(matches!(assortativity(&cycle(5)), Err(Error::Undefined(_))));
        assert!(assortativity(&graph(3, &[])).is_err());
    }

    #[test]
    fn two_stars_joined_by_hubs() {
        // Pearson over ordered endpoint pairs, computed directly.
        let g = graph(6, &[(0, 1), (0, 2), (3, 4), (3, 5), (0, 3)]);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                xs.push(g.degree(a) as f64);
                ys.push(g.degree(b) as f64);
            }
        }
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let cov = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - mx)).sum::<f64>() / n;
        let var = xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>() / n;
        assert!((assortativity(&g).unwrap() - cov / var).abs() < 1e-12);
    }
}
