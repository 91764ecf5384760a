//! Integer grid cells and a hash-grid index for nearest-neighbour queries.

use std::collections::HashMap;

use crate::geometry::Point2;
use crate::{Error, Result};

/// Packed key for a grid cell; the two signed 32-bit coordinates share one u64.
pub type CellKey = u64;

#[inline]
pub fn pack(ix: i64, iy: i64) -> CellKey {
    ((ix as u32 as u64) << 32) | (iy as u32 as u64)
}

#[inline]
pub fn unpack(key: CellKey) -> (i64, i64) {
    let ix = (key >> 32) as u32 as i32 as i64;
    let iy = key as u32 as i32 as i64;
    (ix, iy)
}

/// Cell index of a coordinate at side `r`, anchored at `origin`.
#[inline]
pub fn cell_coord(v: f64, origin: f64, r: f64) -> Result<i64> {
    let c = ((v - origin) / r).floor();
    if c.abs() >= i32::MAX as f64 {
        return Err(Error::GridOverflow(v));
    }
    Ok(c as i64)
}

#[inline]
pub fn cell_of(p: &Point2, origin: &Point2, r: f64) -> Result<CellKey> {
    Ok(pack(
        cell_coord(p.x, origin.x, r)?,
        cell_coord(p.y, origin.y, r)?,
    ))
}

/// Hash grid over a fixed point set, for range and nearest queries.
pub struct GridIndex {
    cell: f64,
    buckets: HashMap<CellKey, Vec<usize>>,
    points: Vec<Point2>,
}

impl GridIndex {
    pub fn build(points: &[Point2], cell: f64) -> Self {
        let mut buckets: HashMap<CellKey, Vec<usize>> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            let key = pack((p.x / cell).floor() as i64, (p.y / cell).floor() as i64);
            buckets.entry(key).or_default().push(i);
        }
        GridIndex {
            cell,
            buckets,
            points: points.to_vec(),
        }
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// Indices of all points within `radius` of `q`.
    pub fn within(&self, q: &Point2, radius: f64) -> Vec<usize> {
        let lo_x = ((q.x - radius) / self.cell).floor() as i64;
        let hi_x = ((q.x + radius) / self.cell).floor() as i64;
        let lo_y = ((q.y - radius) / self.cell).floor() as i64;
        let hi_y = ((q.y + radius) / self.cell).floor() as i64;
        let mut out = Vec::new();
        for ix in lo_x..=hi_x {
            for iy in lo_y..=hi_y {
                if let Some(bucket) = self.buckets.get(&pack(ix, iy)) {
                    for &i in bucket {
                        if self.points[i].dist(q) <= radius {
                            out.push(i);
                        }
                    }
                }
            }
        }
        out
    }

    /// Distance to the nearest indexed point, searching outward ring by ring.
    /// Any point beyond ring `k` is at least `k * cell` away, so once the
    /// best hit is within that bound the search is complete.
    pub fn nearest_dist(&self, q: &Point2) -> f64 {
        assert!(!self.points.is_empty());
        let cx = (q.x / self.cell).floor() as i64;
        let cy = (q.y / self.cell).floor() as i64;
        let mut best = f64::INFINITY;
        let mut ring = 0i64;
        loop {
            for ix in (cx - ring)..=(cx + ring) {
                for iy in (cy - ring)..=(cy + ring) {
                    if ring > 0
                        && ix > cx - ring
                        && ix < cx + ring
                        && iy > cy - ring
                        && iy < cy + ring
                    {
                        continue; // interior already scanned
                    }
                    if let Some(bucket) = self.buckets.get(&pack(ix, iy)) {
                        for &i in bucket {
                            best = best.min(self.points[i].dist(q));
                        }
                    }
                }
            }
            if best <= ring as f64 * self.cell {
                return best;
            }
            ring += 1;
        }
    }
}
