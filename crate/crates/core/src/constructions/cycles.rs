use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colours of `C_len` from `{5, 6}`: alternating, and when `len` is odd the
/// last vertex also gets 6, giving one monochromatic edge in colour 6.
pub fn color_cycle_56(len: usize) -> Result<Vec<usize>> {
    if len < 3 {
        return Err(Error::InvalidCycle(format!("cycle of length {len}")));
    }
    let mut out: Vec<usize> = (0..len).map(|i| if i % 2 == 0 { 5 } else { 6 }).collect();
    out[len - 1] = 6;
    Ok(out)
}

/// Colours a graph of maximum degree 2 with class 1 independent and class 2
/// inducing a matching.
pub fn color_01_paths_cycles(h: &Graph) -> Result<Coloring> {
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) > 2) {
        return Err(Error::Precondition(format!("vertex {v} has degree {}", h.degree(v))));
    }
    let mut classes = vec![0usize; h.n()];
    for comp in h.components() {
        let start = comp.iter().copied().find(|&v| h.degree(v) < 2).unwrap_or(comp[0]);
        let is_cycle = h.degree(start) == 2;
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = h.neighbors(cur).iter().copied().find(|&w| w != prev && !walk.contains(&w));
            match next {
                Some(w) => {
                    walk.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        for (i, &x) in walk.iter().enumerate() {
            classes[x] = 1 + i % 2;
        }
        if is_cycle && walk.len() % 2 == 1 {
            classes[*walk.last().expect("non-empty walk")] = 2;
        }
    }
    Coloring::new(classes)
}
