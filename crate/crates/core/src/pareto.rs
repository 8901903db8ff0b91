//! Non-dominated filtering of objective pairs.

use std::cmp::Ordering;

fn cmp_pair(a: (f64, f64), b: (f64, f64)) -> Ordering {
    a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1))
}

/// Keeps the items whose key is not strictly dominated (smaller in both
/// coordinates) by any other key. Output is sorted by the first coordinate,
/// then the second; items with identical keys are collapsed to the first one.
/// Keys containing NaN are dropped.
pub fn pareto_filter_by<T, K>(items: Vec<T>, key: K) -> Vec<T>
where
    K: Fn(&T) -> (f64, f64),
{
    let mut keyed: Vec<((f64, f64), T)> = items
        .into_iter()
        .map(|t| (key(&t), t))
        .filter(|((x, y), _)| !x.is_nan() && !y.is_nan())
        .collect();
    keyed.sort_by(|a, b| cmp_pair(a.0, b.0));

    let mut keep = vec![false; keyed.len()];
    // min second coordinate over strictly smaller first coordinates
    let mut best_prev = f64::INFINITY;
    let mut start = 0;
    while start < keyed.len() {
        let x = keyed[start].0 .0;
        let end = start + keyed[start..].iter().take_while(|(k, _)| k.0 == x).count();
        let mut last_kept = None;
        for (i, flag) in keep.iter_mut().enumerate().take(end).skip(start) {
            let y = keyed[i].0 .1;
            if y <= best_prev && last_kept != Some(y) {
                last_kept = Some(y);
                *flag = true;
            }
        }
        // sorted, so the group minimum is its first element
        best_prev = best_prev.min(keyed[start].0 .1);
        start = end;
    }
    keyed.into_iter().zip(keep).filter(|(_, k)| *k).map(|((_, t), _)| t).collect()
}

/// [`pareto_filter_by`] on bare pairs (minimization in both coordinates).
pub fn pareto_filter(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    pareto_filter_by(points.to_vec(), |&p| p)
}
