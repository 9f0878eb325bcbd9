//! Test-only helpers: SVG path extraction and a scanline rasterizer.
#![allow(dead_code)]

/// Polygon of the `<path id="{id}" ... d="...">` element, in pixels.
pub fn path_polygon(svg: &str, id: &str) -> Option<Vec<[f64; 2]>> {
    let start = svg.find(&format!("id=\"{id}\""))?;
    let rest = &svg[start..];
    let d_at = rest.find(" d=\"")? + 4;
    let d_end = rest[d_at..].find('"')?;
    let d = &rest[d_at..d_at + d_end];
    let mut pts = Vec::new();
    for tok in d.split_whitespace() {
        let tok = tok.trim_start_matches(['M', 'L']);
        if tok == "Z" || tok.is_empty() {
            continue;
        }
        let (x, y) = tok.split_once(',')?;
        pts.push([x.parse().ok()?, y.parse().ok()?]);
    }
    Some(pts)
}

/// Centre of the `<circle id="{id}" ...>` element.
pub fn circle_center(svg: &str, id: &str) -> Option<[f64; 2]> {
    let start = svg.find(&format!("id=\"{id}\""))?;
    let rest = &svg[start..svg[start..].find("/>")? + start];
    let attr = |name: &str| -> Option<f64> {
        let at = rest.find(&format!(" {name}=\""))? + name.len() + 3;
        let end = rest[at..].find('"')?;
        rest[at..at + end].parse().ok()
    };
    Some([attr("cx")?, attr("cy")?])
}

/// Pixel mask of a polygon under the even-odd rule, sampled at pixel centres.
pub fn rasterize(poly: &[[f64; 2]], width: usize, height: usize) -> Vec<bool> {
    let mut mask = vec![false; width * height];
    let n = poly.len();
    let mut xs = Vec::new();
    for row in 0..height {
        let yc = row as f64 + 0.5;
        xs.clear();
        for i in 0..n {
            let [x0, y0] = poly[i];
            let [x1, y1] = poly[(i + 1) % n];
            if (y0 <= yc && yc < y1) || (y1 <= yc && yc < y0) {
                xs.push(x0 + (yc - y0) / (y1 - y0) * (x1 - x0));
            }
        }
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for pair in xs.chunks(2) {
            if let [a, b] = pair {
                for col in 0..width {
                    let xc = col as f64 + 0.5;
                    if *a <= xc && xc < *b {
                        mask[row * width + col] = true;
                    }
                }
            }
        }
    }
    mask
}

pub fn count(mask: &[bool]) -> usize {
    mask.iter().filter(|m| **m).count()
}

pub fn union(masks: &[Vec<bool>]) -> Vec<bool> {
    let mut out = masks[0].clone();
    for m in &masks[1..] {
        for (o, v) in out.iter_mut().zip(m) {
            *o |= *v;
        }
    }
    out
}

/// Whether the pixel under `p`, or one of its eight neighbours, is set.
pub fn hit(mask: &[bool], width: usize, height: usize, p: [f64; 2]) -> bool {
    let (cx, cy) = (p[0].floor() as i64, p[1].floor() as i64);
    (-1..=1).any(|dy| {
        (-1..=1).any(|dx| {
            let (x, y) = (cx + dx, cy + dy);
            x >= 0
                && y >= 0
                && (x as usize) < width
                && (y as usize) < height
                && mask[y as usize * width + x as usize]
        })
    })
}
