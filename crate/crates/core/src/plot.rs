//! SVG wall diagrams in the `(β, α)` half-plane.
//!
//! Geometry is exact up to the final pixel coordinates, which are rendered
//! from `f64` with three decimals.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Result, TiltError};
use crate::rational::{format_rational, int, literal, Rational};
use crate::walls::{Locus, Region, Wall};

const WIDTH: i64 = 640;
const HEIGHT: i64 = 400;
const MARGIN: i64 = 40;

/// `x = offset_x + scale_x·β`, `y = offset_y - scale_y·α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMap {
    #[serde(with = "literal")]
    pub scale_x: Rational,
    #[serde(with = "literal")]
    pub offset_x: Rational,
    #[serde(with = "literal")]
    pub scale_y: Rational,
    #[serde(with = "literal")]
    pub offset_y: Rational,
}

impl AffineMap {
    pub fn for_region(region: &Region) -> Result<Self> {
        if region.beta_max <= region.beta_min || !region.alpha_max.is_positive() {
            return Err(TiltError::EmptyRegion(region.to_string()));
        }
        let scale_x = int(WIDTH - 2 * MARGIN) / (&region.beta_max - &region.beta_min);
        let scale_y = int(HEIGHT - 2 * MARGIN) / &region.alpha_max;
        let offset_x = int(MARGIN) - &scale_x * &region.beta_min;
        Ok(AffineMap { scale_x, offset_x, scale_y, offset_y: int(HEIGHT - MARGIN) })
    }

    pub fn x(&self, beta: &Rational) -> Rational {
        &self.offset_x + &self.scale_x * beta
    }

    pub fn y(&self, alpha: &Rational) -> Rational {
        &self.offset_y - &self.scale_y * alpha
    }
}

fn px(q: &Rational) -> String {
    format!("{:.3}", q.to_f64().unwrap_or(f64::NAN))
}

fn pxf(x: f64) -> String {
    format!("{x:.3}")
}

/// Renders one element per drawable wall: `<line>` for vertical walls and an
/// arc `<path>` for semicircles. Other loci are skipped.
pub fn plot_walls(walls: &[Wall], region: &Region) -> Result<String> {
    let map = AffineMap::for_region(region)?;
    let (x0, x1) = (map.x(&region.beta_min), map.x(&region.beta_max));
    let (y0, y1) = (map.y(&int(0)), map.y(&region.alpha_max));
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let meta = serde_json::json!({ "transform": map, "region": region });
    let _ = writeln!(svg, "<metadata>{meta}</metadata>");
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="plot"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
        px(&x0),
        px(&y1),
        px(&(&x1 - &x0)),
        px(&(&y0 - &y1))
    );
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(&x0),
        px(&y0),
        px(&x1),
        px(&y0)
    );
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(&x0),
        px(&y0),
        px(&x0),
        px(&y1)
    );
    let _ = writeln!(svg, r#"<text x="{}" y="{}">β</text>"#, px(&x1), px(&(&y0 + int(20))));
    let _ = writeln!(svg, r#"<text x="{}" y="{}">α</text>"#, px(&(&x0 - int(20))), px(&y1));
    for (label, beta) in
        [(format_rational(&region.beta_min), &region.beta_min), (format_rational(&region.beta_max), &region.beta_max)]
    {
        let _ =
            writeln!(svg, r#"<text class="tick" x="{}" y="{}">{label}</text>"#, px(&map.x(beta)), px(&(&y0 + int(15))));
    }
    let _ = writeln!(svg, r#"<g clip-path="url(#plot)" fill="none" stroke="steelblue">"#);
    for wall in walls {
        match &wall.locus {
            Locus::Vertical { beta } => {
                let x = px(&map.x(beta));
                let _ = writeln!(
                    svg,
                    r#"<line class="wall vertical" data-beta="{}" x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
                    format_rational(beta),
                    px(&y0),
                    px(&y1)
                );
            }
            Locus::Semicircle { center, radius_sq } => {
                let r = radius_sq.to_f64().unwrap_or(0.0).sqrt();
                let c = center.to_f64().unwrap_or(f64::NAN);
                let sx = map.scale_x.to_f64().unwrap_or(f64::NAN);
                let sy = map.scale_y.to_f64().unwrap_or(f64::NAN);
                let ox = map.offset_x.to_f64().unwrap_or(f64::NAN);
                let y = px(&y0);
                let _ = writeln!(
                    svg,
                    r#"<path class="wall semicircle" data-center="{}" data-radius-sq="{}" d="M {} {y} A {} {} 0 0 1 {} {y}"/>"#,
                    format_rational(center),
                    format_rational(radius_sq),
                    pxf(ox + sx * (c - r)),
                    pxf(r * sx),
                    pxf(r * sy),
                    pxf(ox + sx * (c + r)),
                );
            }
            Locus::Everywhere | Locus::Empty => {}
        }
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}

pub fn write_plot(walls: &[Wall], region: &Region, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, plot_walls(walls, region)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kclass::KClass;
    use crate::rational::rat;

    fn region() -> Region {
        Region::new(int(-3), int(1), int(3))
    }

    #[test]
    fn axes_only() {
        let svg = plot_walls(&[], &region()).unwrap();
        assert_eq!(svg.matches(r#"class="axis""#).count(), 2);
        assert!(!svg.contains("class=\"wall"));
        assert!(svg.contains("<metadata>"));
    }

    #[test]
    fn vertical_wall_position() {
        let r = region();
        let w = Wall { locus: Locus::Vertical { beta: int(0) }, witness: KClass::from_ints(1, &[0], int(0)) };
        let svg = plot_walls(&[w], &r).unwrap();
        let map = AffineMap::for_region(&r).unwrap();
        // 640 - 80 pixels over a width of 4: x(0) = 40 + 140·3
        assert_eq!(map.x(&int(0)), int(460));
        assert!(svg.contains(r#"x1="460.000" y1="360.000" x2="460.000" y2="40.000""#));
    }

    #[test]
    fn arcs_counted() {
        let semis: Vec<Wall> = (1..4)
            .map(|k| Wall {
                locus: Locus::Semicircle { center: rat(-3, 2), radius_sq: rat(k, 4) },
                witness: KClass::from_ints(1, &[-1], rat(1, 2)),
            })
            .collect();
        let svg = plot_walls(&semis, &region()).unwrap();
        assert_eq!(svg.matches("<path class=\"wall semicircle\"").count(), 3);
        assert!(svg.contains(r#"data-center="-3/2" data-radius-sq="1/4""#));
    }

    #[test]
    fn empty_region_rejected() {
        assert!(plot_walls(&[], &Region::new(int(1), int(1), int(3))).is_err());
        assert!(plot_walls(&[], &Region::new(int(0), int(1), int(0))).is_err());
    }

    #[test]
    fn writes_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("w.svg");
        write_plot(&[], &region(), &path).unwrap();
        assert!(std::fs::read_to_string(path).unwrap().starts_with("<svg"));
    }
}
