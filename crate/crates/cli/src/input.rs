//! graph6 line streams from files or stdin.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::{Path, PathBuf};

use subcubic_core::Graph;
use thiserror::Error;

use crate::graph6::{self, Graph6Error, HEADER};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{origin}: {source}")]
    Io {
        origin: String,
        #[source]
        source: io::Error,
    },
    #[error("{origin}:{line}: {source}")]
    Malformed {
        origin: String,
        line: usize,
        #[source]
        source: Graph6Error,
    },
}

/// One decoded input line. `graph6` is the line as given, minus
/// surrounding whitespace and any header.
#[derive(Clone, Debug)]
pub struct GraphLine {
    pub origin: String,
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
}

struct Source {
    origin: String,
    reader: Box<dyn BufRead + Send>,
}

/// Iterator over every graph in `paths`, in order. No paths, or `-`,
/// means stdin. Blank and header-only lines are skipped.
pub struct GraphLines {
    pending: std::vec::IntoIter<PathBuf>,
    current: Option<(Source, usize)>,
    failed: bool,
}

impl GraphLines {
    pub fn new(paths: &[PathBuf]) -> Self {
        let paths = if paths.is_empty() {
            vec![PathBuf::from("-")]
        } else {
            paths.to_vec()
        };
        GraphLines {
            pending: paths.into_iter(),
            current: None,
            failed: false,
        }
    }

    fn open(path: &Path) -> Result<Source, InputError> {
        if path == Path::new("-") {
            return Ok(Source {
                origin: "<stdin>".to_owned(),
                reader: Box::new(BufReader::new(io::stdin())),
            });
        }
        let origin = path.display().to_string();
        match File::open(path) {
            Ok(f) => Ok(Source {
                origin,
                reader: Box::new(BufReader::new(f)),
            }),
            Err(source) => Err(InputError::Io { origin, source }),
        }
    }
}

impl Iterator for GraphLines {
    type Item = Result<GraphLine, InputError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            let Some((src, line)) = &mut self.current else {
                let path = self.pending.next()?;
                match Self::open(&path) {
                    Ok(src) => self.current = Some((src, 0)),
                    Err(e) => {
                        self.failed = true;
                        return Some(Err(e));
                    }
                }
                continue;
            };
            let mut buf = String::new();
            match src.reader.read_line(&mut buf) {
                Ok(0) => {
                    self.current = None;
                    continue;
                }
                Ok(_) => *line += 1,
                Err(source) => {
                    self.failed = true;
                    return Some(Err(InputError::Io {
                        origin: src.origin.clone(),
                        source,
                    }));
                }
            }
            let text = buf.trim();
            let text = text.strip_prefix(HEADER).unwrap_or(text).trim();
            if text.is_empty() {
                continue;
            }
            return Some(match graph6::decode(text) {
                Ok(graph) => Ok(GraphLine {
                    origin: src.origin.clone(),
                    line: *line,
                    graph6: text.to_owned(),
                    graph,
                }),
                Err(source) => {
                    self.failed = true;
                    Err(InputError::Malformed {
                        origin: src.origin.clone(),
                        line: *line,
                        source,
                    })
                }
            });
        }
    }
}
