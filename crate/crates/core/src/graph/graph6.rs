//! graph6 codec and the plain `n m` edge-list format.
//!
//! graph6 layout: a size header (`n + 63` for `n < 63`, otherwise `~` and
//! three 6-bit groups, or `~~` and six), then the upper triangle read column
//! by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per
//! byte, most significant first, each byte offset by 63.

use super::{Graph, GraphError};

const BIAS: u8 = 63;

fn push_size(out: &mut String, n: usize) {
    if n < 63 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + BIAS) as char);
        }
    }
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        push_size(&mut out, n);
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                nbits += 1;
                if nbits == 6 {
                    out.push((acc + BIAS) as char);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(((acc << (6 - nbits)) + BIAS) as char);
        }
        out
    }

    /// Decodes one graph6 line. A trailing newline is tolerated; the optional
    /// `>>graph6<<` header is not.
    pub fn from_graph6(line: &str) -> Result<Graph, GraphError> {
        let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
        let err = |offset: usize, message: &str| GraphError::Parse {
            offset,
            message: message.to_string(),
        };
        for (i, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(err(i, "byte outside graph6 range 63..=126"));
            }
        }
        let group = |i: usize| -> Result<usize, GraphError> {
            bytes
                .get(i)
                .map(|&b| (b - BIAS) as usize)
                .ok_or_else(|| err(i, "truncated size header"))
        };
        let (n, mut pos) = match bytes.first() {
            None => return Err(err(0, "empty input")),
            Some(&b'~') if bytes.get(1) == Some(&b'~') => {
                let mut n = 0;
                for i in 2..8 {
                    n = (n << 6) | group(i)?;
                }
                (n, 8)
            }
            Some(&b'~') => {
                let mut n = 0;
                for i in 1..4 {
                    n = (n << 6) | group(i)?;
                }
                (n, 4)
            }
            Some(&b) => ((b - BIAS) as usize, 1),
        };
        let mut g = Graph::try_empty(n).map_err(|e| err(0, &e.to_string()))?;
        let total = n * n.saturating_sub(1) / 2;
        let expected = pos + total.div_ceil(6);
        if bytes.len() != expected {
            return Err(err(
                bytes.len().min(expected),
                &format!("expected {} bytes, found {}", expected, bytes.len()),
            ));
        }
        let mut k = 0;
        let mut current = 0u8;
        for j in 1..n {
            for i in 0..j {
                if k % 6 == 0 {
                    current = bytes[pos] - BIAS;
                    pos += 1;
                }
                if current >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        if k % 6 != 0 {
            let pad = current & ((1 << (6 - k % 6)) - 1);
            if pad != 0 {
                return Err(err(pos - 1, "nonzero padding bits"));
            }
        }
        Ok(g)
    }
}

/// Parses `"n m\nu v\n..."`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut offset = 0;
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let nums: Result<Vec<usize>, _> = content.split_whitespace().map(str::parse).collect();
        let nums = nums.map_err(|e| GraphError::Parse {
            offset: start,
            message: format!("expected two integers: {e}"),
        })?;
        if nums.len() != 2 {
            return Err(GraphError::Parse {
                offset: start,
                message: format!("expected two integers, found {}", nums.len()),
            });
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some(_) => edges.push((nums[0], nums[1])),
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        offset: 0,
        message: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            offset,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.edge_count() != m {
        return Err(GraphError::Parse {
            offset,
            message: "duplicate edges".into(),
        });
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
