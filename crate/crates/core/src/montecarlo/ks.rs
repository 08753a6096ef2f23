use crate::error::{QtfError, Result};
use crate::tracks::TrackDataset;

/// Two-sample Kolmogorov–Smirnov statistic `sup |F_a − F_b|` over radii.
pub fn ks_statistic(a: &TrackDataset, b: &TrackDataset) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(QtfError::EmptyDataset);
    }
    let mut xs: Vec<f64> = a.radii().collect();
    let mut ys: Vec<f64> = b.radii().collect();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    Ok(ks_sorted(&xs, &ys))
}

pub(crate) fn ks_sorted(xs: &[f64], ys: &[f64]) -> f64 {
    let (nx, ny) = (xs.len() as f64, ys.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < xs.len() && j < ys.len() {
        // Step past every copy of the next smallest value in both samples so
        // ties are evaluated once, after both CDFs have jumped.
        let x = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= x {
            i += 1;
        }
        while j < ys.len() && ys[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / nx - j as f64 / ny).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[f64]) -> TrackDataset {
        TrackDataset::from_radii("ks", v.iter().copied())
    }

    #[test]
    fn identical_is_zero() {
        let a = ds(&[3.0, 1.0, 2.0, 2.0]);
        assert_eq!(ks_statistic(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn disjoint_is_one() {
        let a = ds(&[1e-3; 100]);
        let b = ds(&[9e-3; 100]);
        assert_eq!(ks_statistic(&a, &b).unwrap(), 1.0);
        assert_eq!(ks_statistic(&b, &a).unwrap(), 1.0);
    }

    #[test]
    fn hand_computed_gap() {
        assert_eq!(ks_statistic(&ds(&[1.0, 2.0]), &ds(&[1.5])).unwrap(), 0.5);
    }

    #[test]
    fn empty_is_error() {
        assert!(ks_statistic(&ds(&[]), &ds(&[1.0])).is_err());
    }
}
