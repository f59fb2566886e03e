//! Bipartitions of the link set and their geometric statistics.
//!
//! A region is just a link mask; the rectangle/chain/orientation
//! constructors are conveniences that also record enough geometry to
//! report boundary lengths. The region DSL understood by the CLI is
//! parsed here:
//!
//! ```text
//! rect:i0,j0,a,b | chain:(row|col),n | orient:(v|h) | links:n(,n)* | not(<spec>)
//! ```

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::surface::{Surface, SurfaceKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionKind {
    /// a×b block of faces anchored at (i0, j0); bounded by a convex dual loop.
    Rect { i0: usize, j0: usize, a: usize, b: usize },
    /// Arbitrary mask (chains, orientations, explicit sets, complements).
    Mask,
}

/// One side A of a bipartition (A, B) of the links of a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    mask: BitVector,
    kind: RegionKind,
}

/// Geometric statistics of a bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionStats {
    pub size_a: usize,
    /// Sites whose star touches both A and B (the white sites of the
    /// boundary picture).
    pub boundary_sites: usize,
    /// Sites whose star lies entirely inside A (Σ_A).
    pub bulk_sites_a: usize,
    /// Sites whose star lies entirely inside B (Σ_B).
    pub bulk_sites_b: usize,
    /// Perimeter of the defining convex dual loop, 2a+2b. Only rectangles
    /// have one.
    pub boundary_links: Option<usize>,
}

impl Region {
    pub fn from_mask(s: &Surface, mask: BitVector) -> Result<Region> {
        if mask.len() != s.n_links() {
            return Err(Error::Argument(format!(
                "region mask length {} does not match surface n_links {}",
                mask.len(),
                s.n_links()
            )));
        }
        Ok(Region { mask, kind: RegionKind::Mask })
    }

    pub fn from_links(s: &Surface, links: &[usize]) -> Result<Region> {
        for &l in links {
            if l >= s.n_links() {
                return Err(Error::Argument(format!(
                    "link {l} out of range (surface has {} links)",
                    s.n_links()
                )));
            }
        }
        Region::from_mask(s, BitVector::from_bits(s.n_links(), links))
    }

    /// All links inside or crossed by the convex dual loop around the a×b
    /// block of faces anchored at face (i0, j0). The anchor may wrap; the
    /// extent must not (a, b < k keeps the loop contractible).
    pub fn rect(s: &Surface, i0: usize, j0: usize, a: usize, b: usize) -> Result<Region> {
        let k = require_torus(s)?;
        if a == 0 || b == 0 {
            return Err(Error::Argument("rectangle extent must be positive".into()));
        }
        if a >= k || b >= k {
            return Err(Error::Argument(format!(
                "rectangle extent {a}×{b} must stay below k={k}; a wrapping loop is not convex"
            )));
        }
        if i0 >= k || j0 >= k {
            return Err(Error::Argument(format!(
                "rectangle anchor ({i0},{j0}) out of range for k={k}"
            )));
        }
        let mut mask = BitVector::zeros(s.n_links());
        for r in 0..a {
            for c in 0..b {
                let face = ((i0 + r) % k) * k + (j0 + c) % k;
                for l in s.plaquettes()[face].iter_ones() {
                    mask.set(l, true);
                }
            }
        }
        Ok(Region { mask, kind: RegionKind::Rect { i0, j0, a, b } })
    }

    /// All horizontal links of one site row, or all vertical links of one
    /// site column: a non-contractible chain of k spins.
    pub fn chain(s: &Surface, orientation: ChainOrientation, index: usize) -> Result<Region> {
        let k = require_torus(s)?;
        if index >= k {
            return Err(Error::Argument(format!(
                "chain index {index} out of range for k={k}"
            )));
        }
        let links: Vec<usize> = match orientation {
            ChainOrientation::Row => (0..k).map(|j| Surface::h_link(k, index, j)).collect(),
            ChainOrientation::Column => (0..k).map(|i| Surface::v_link(k, i, index)).collect(),
        };
        Ok(Region {
            mask: BitVector::from_bits(s.n_links(), &links),
            kind: RegionKind::Mask,
        })
    }

    /// Every vertical (or horizontal) link on the lattice.
    pub fn orientation(s: &Surface, which: LinkOrientation) -> Result<Region> {
        let k = require_torus(s)?;
        let parity = match which {
            LinkOrientation::Horizontal => 0,
            LinkOrientation::Vertical => 1,
        };
        let links: Vec<usize> = (0..2 * k * k).filter(|l| l % 2 == parity).collect();
        Ok(Region {
            mask: BitVector::from_bits(s.n_links(), &links),
            kind: RegionKind::Mask,
        })
    }

    pub fn complement(&self) -> Region {
        Region {
            mask: self.mask.complement(),
            kind: RegionKind::Mask,
        }
    }

    pub fn mask(&self) -> &BitVector {
        &self.mask
    }

    pub fn kind(&self) -> &RegionKind {
        &self.kind
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones()
    }

    /// A ≠ ∅ and A ≠ all links; required by every entropy query.
    pub fn is_nontrivial(&self) -> bool {
        let n = self.mask.count_ones();
        n > 0 && n < self.mask.len()
    }

    /// Canonical DSL text that re-parses to the same mask.
    pub fn to_spec(&self) -> String {
        match self.kind {
            RegionKind::Rect { i0, j0, a, b } => format!("rect:{i0},{j0},{a},{b}"),
            RegionKind::Mask => {
                let links: Vec<String> =
                    self.mask.iter_ones().map(|l| l.to_string()).collect();
                format!("links:{}", links.join(","))
            }
        }
    }

    /// Counts boundary, bulk-A and bulk-B sites by star support.
    pub fn stats(&self, s: &Surface) -> RegionStats {
        let b_mask = self.mask.complement();
        let mut boundary_sites = 0;
        let mut bulk_a = 0;
        let mut bulk_b = 0;
        for star in s.stars() {
            if star.is_subset_of(&self.mask) {
                bulk_a += 1;
            } else if star.is_subset_of(&b_mask) {
                bulk_b += 1;
            } else {
                boundary_sites += 1;
            }
        }
        let boundary_links = match self.kind {
            RegionKind::Rect { a, b, .. } => Some(2 * a + 2 * b),
            RegionKind::Mask => None,
        };
        RegionStats {
            size_a: self.mask.count_ones(),
            boundary_sites,
            bulk_sites_a: bulk_a,
            bulk_sites_b: bulk_b,
            boundary_links,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainOrientation {
    Row,
    Column,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkOrientation {
    Vertical,
    Horizontal,
}

fn require_torus(s: &Surface) -> Result<usize> {
    match *s.kind() {
        SurfaceKind::SquareTorus { k } => Ok(k),
        SurfaceKind::Generic => Err(Error::Unsupported(
            "geometric region constructors require a square torus".into(),
        )),
    }
}

/// Parses the region DSL. Syntax errors carry the byte offset of the
/// failure; semantic errors name the violated constraint.
pub fn parse_region_spec(text: &str, s: &Surface) -> Result<Region> {
    let spec: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    parse_inner(&spec, 0, s)
}

fn parse_inner(spec: &str, offset: usize, s: &Surface) -> Result<Region> {
    if let Some(rest) = spec.strip_prefix("not(") {
        let Some(body) = rest.strip_suffix(')') else {
            return Err(Error::Syntax {
                position: offset + spec.len(),
                message: "expected closing ')'".into(),
            });
        };
        return Ok(parse_inner(body, offset + 4, s)?.complement());
    }
    let Some(colon) = spec.find(':') else {
        return Err(Error::Syntax {
            position: offset,
            message: format!(
                "expected one of rect:, chain:, orient:, links:, not(...); got {spec:?}"
            ),
        });
    };
    let (head, args) = (&spec[..colon], &spec[colon + 1..]);
    let args_at = offset + colon + 1;
    match head {
        "rect" => {
            let nums = parse_usizes(args, args_at, 4)?;
            Region::rect(s, nums[0], nums[1], nums[2], nums[3])
        }
        "chain" => {
            let mut parts = args.splitn(2, ',');
            let which = parts.next().unwrap_or("");
            let orientation = match which {
                "row" => ChainOrientation::Row,
                "col" => ChainOrientation::Column,
                other => {
                    return Err(Error::Syntax {
                        position: args_at,
                        message: format!("expected 'row' or 'col', got {other:?}"),
                    })
                }
            };
            let idx_text = parts.next().ok_or(Error::Syntax {
                position: args_at + which.len(),
                message: "expected ',<index>'".into(),
            })?;
            let index = parse_usizes(idx_text, args_at + which.len() + 1, 1)?[0];
            Region::chain(s, orientation, index)
        }
        "orient" => match args {
            "v" => Region::orientation(s, LinkOrientation::Vertical),
            "h" => Region::orientation(s, LinkOrientation::Horizontal),
            other => Err(Error::Syntax {
                position: args_at,
                message: format!("expected 'v' or 'h', got {other:?}"),
            }),
        },
        "links" => {
            let mut links = Vec::new();
            let mut at = args_at;
            for part in args.split(',') {
                let n: usize = part.parse().map_err(|_| Error::Syntax {
                    position: at,
                    message: format!("expected a link id, got {part:?}"),
                })?;
                if n >= s.n_links() {
                    return Err(Error::Argument(format!(
                        "link {n} out of range (surface has {} links)",
                        s.n_links()
                    )));
                }
                links.push(n);
                at += part.len() + 1;
            }
            Region::from_links(s, &links)
        }
        other => Err(Error::Syntax {
            position: offset,
            message: format!("unknown region kind {other:?}"),
        }),
    }
}

fn parse_usizes(text: &str, offset: usize, expect: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != expect {
        return Err(Error::Syntax {
            position: offset,
            message: format!("expected {expect} comma-separated integers, got {text:?}"),
        });
    }
    let mut out = Vec::with_capacity(expect);
    let mut at = offset;
    for p in parts {
        out.push(p.parse().map_err(|_| Error::Syntax {
            position: at,
            message: format!("expected an integer, got {p:?}"),
        })?);
        at += p.len() + 1;
    }
    Ok(out)
}
