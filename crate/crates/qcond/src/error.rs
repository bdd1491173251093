// Copyright 2026 The qcond Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::PathBuf;

/// Alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the file, parsing and command layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input text: expressions, labels, JSON documents.
    #[error("parse error: {0}")]
    Parse(String),
    /// A valid request the model rejects, e.g. a zero-probability projection.
    #[error("{0}")]
    Domain(#[from] qcond_core::Error),
    /// Reading or writing a file failed.
    #[error("{path}: {source}")]
    Io {
        /// File involved.
        path: PathBuf,
        /// Underlying error.
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit status for this error: 2 parse, 3 domain, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Domain(_) => 3,
            Error::Io { .. } => 4,
        }
    }

    pub(crate) fn parse(msg: impl std::fmt::Display) -> Self {
        Error::Parse(msg.to_string())
    }
}

impl From<crate::parse::ParseError> for Error {
    fn from(e: crate::parse::ParseError) -> Self {
        Error::Parse(e.to_string())
    }
}
