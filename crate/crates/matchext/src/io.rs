// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! graph6 line streams.

use std::io::{self, BufRead, Write};

use matchext_core::graph6::{self, Graph6Error};
use matchext_core::Graph;

/// Header some generators write before the first graph.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug)]
pub enum StreamError {
    Io(io::Error),
    Decode { line: usize, source: Graph6Error },
}

impl std::fmt::Display for StreamError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StreamError::Io(e) => write!(f, "read error: {e}"),
            StreamError::Decode { line, source } => write!(f, "line {line}: {source}"),
        }
    }
}

impl std::error::Error for StreamError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            StreamError::Io(e) => Some(e),
            StreamError::Decode { source, .. } => Some(source),
        }
    }
}

impl From<io::Error> for StreamError {
    fn from(e: io::Error) -> Self {
        StreamError::Io(e)
    }
}

/// Decodes one graph per line. Surrounding whitespace and blank lines are
/// ignored, and a leading `>>graph6<<` header may prefix any line.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>, StreamError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let token = line.trim();
        let token = token.strip_prefix(GRAPH6_HEADER).unwrap_or(token);
        if token.is_empty() {
            continue;
        }
        out.push(graph6::decode(token).map_err(|source| StreamError::Decode {
            line: i + 1,
            source,
        })?);
    }
    Ok(out)
}

/// Writes one graph6 string per line.
pub fn write_graph6<'a, W: Write>(
    mut w: W,
    graphs: impl IntoIterator<Item = &'a Graph>,
) -> io::Result<()> {
    for g in graphs {
        writeln!(w, "{}", graph6::encode(g))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_blank_lines() {
        let text = ">>graph6<<C~\n\n  Bw \n";
        let gs = read_graph6(text.as_bytes()).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0], Graph::complete(4));
        assert_eq!(gs[1].edge_count(), 3);
    }

    #[test]
    fn reports_line_numbers() {
        let err = read_graph6("C~\nC\n".as_bytes()).unwrap_err();
        assert!(matches!(err, StreamError::Decode { line: 2, .. }));
    }

    #[test]
    fn round_trip() {
        let gs = vec![Graph::petersen(), Graph::cycle(5), Graph::empty(0)];
        let mut buf = Vec::new();
        write_graph6(&mut buf, &gs).unwrap();
        assert_eq!(read_graph6(buf.as_slice()).unwrap(), gs);
    }
}
