//! Newton polygons, face polynomials and the temperedness test.

use super::cyclotomic::roots_all_roots_of_unity;
use super::parampoly::ParamPoly;
use super::unipoly::UniPoly;
use crate::{Error, Rat, Result};

/// Convex hull of the exponent support, counterclockwise, together with the
/// face (edge) polynomials.
#[derive(Clone, Debug)]
pub struct NewtonPolygon {
    pub vertices: Vec<(i64, i64)>,
    pub faces: Vec<Face>,
}

/// One edge of the polygon. `coeffs[i]` is the coefficient (a polynomial in k)
/// at lattice point `from + i * step`.
#[derive(Clone, Debug)]
pub struct Face {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub coeffs: Vec<UniPoly>,
}

impl Face {
    /// Face polynomial when every coefficient is k-free.
    pub fn poly_kfree(&self) -> Option<UniPoly> {
        if self.coeffs.iter().any(|c| c.degree().map_or(false, |d| d > 0)) {
            return None;
        }
        Some(UniPoly::from_coeffs(
            self.coeffs.iter().map(|c| c.coeff(0)).collect(),
        ))
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone-chain convex hull, counterclockwise, collinear points dropped.
pub fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort();
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl NewtonPolygon {
    pub fn of(p: &ParamPoly) -> NewtonPolygon {
        assert!(!p.is_zero());
        let hull = convex_hull(p.support());
        let mut faces = Vec::new();
        let nedges = match hull.len() {
            0 | 1 => 0,
            2 => 1,
            n => n,
        };
        for e in 0..nedges {
            let from = hull[e];
            let to = hull[(e + 1) % hull.len()];
            let (dx, dy) = (to.0 - from.0, to.1 - from.1);
            let g = num_integer::gcd(dx.abs(), dy.abs());
            let step = (dx / g, dy / g);
            let coeffs = (0..=g)
                .map(|i| {
                    let pt = (from.0 + i * step.0, from.1 + i * step.1);
                    p.terms()
                        .get(&(pt.0 as u32, pt.1 as u32))
                        .cloned()
                        .unwrap_or_else(UniPoly::zero)
                })
                .collect();
            faces.push(Face { from, to, coeffs });
        }
        NewtonPolygon {
            vertices: hull,
            faces,
        }
    }
}

/// Temperedness: every face polynomial of the Newton polygon has only roots
/// of unity as roots.
///
/// With `k = None` the test is symbolic in k: it succeeds only when every
/// face polynomial is k-free (interior monomials may still involve k), and
/// errors with [`Error::SymbolicUndecidable`] otherwise. With a fixed k the
/// test always decides.
pub fn is_tempered(p: &ParamPoly, k: Option<&Rat>) -> Result<bool> {
    assert!(!p.is_zero());
    let p_fixed;
    let p = match k {
        Some(kv) => {
            p_fixed = p.at_k(kv).to_parampoly();
            &p_fixed
        }
        None => p,
    };
    if p.is_zero() {
        return Err(Error::Other("polynomial vanishes at this k".into()));
    }
    let np = NewtonPolygon::of(p);
    for face in &np.faces {
        let fp = face.poly_kfree().ok_or_else(|| Error::SymbolicUndecidable {
            face: format!("{:?} -> {:?}", face.from, face.to),
        })?;
        if !roots_all_roots_of_unity(&fp) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::rint;

    #[test]
    fn hull_of_boyd_family() {
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        let np = NewtonPolygon::of(&q);
        // vertices (0,1), (0,2), (4,0), (4,1); k-terms interior
        assert_eq!(np.vertices.len(), 4);
        for f in &np.faces {
            assert!(f.poly_kfree().is_some());
        }
    }

    #[test]
    fn tempered_symbolic_and_fixed() {
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        assert!(is_tempered(&q, None).unwrap());
        assert!(is_tempered(&q, Some(&rint(3))).unwrap());
        // shifted family stays tempered (Lemma-style check at the polygon level)
        let s = q.shift_x(&rint(-1));
        assert!(is_tempered(&s, None).unwrap());
        // x + y + 2 is not tempered: face root -2
        let bad = parse_poly("x + y + 2").unwrap();
        assert!(!is_tempered(&bad, None).unwrap());
    }

    #[test]
    fn symbolic_undecidable_when_k_on_face() {
        // k sits on a vertex of the polygon
        let p = parse_poly("k*x^2 + y + 1").unwrap();
        assert!(matches!(
            is_tempered(&p, None),
            Err(Error::SymbolicUndecidable { .. })
        ));
        // but at fixed k it decides
        assert!(is_tempered(&p, Some(&rint(1))).unwrap());
    }
}
