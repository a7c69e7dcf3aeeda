//! On-disk catalog: one `<hash>.json` per artifact plus `index.tsv`.
//!
//! The index is append-only, one line per artifact: hash, kind, summary.
//! Writers take a lock file; readers never block.

use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::Duration;

use crate::artifact::{ArtifactError, ArtifactRecord, Kind};

/// Environment variable naming the catalog root.
pub const CATALOG_ENV: &str = "QGRAPH_CATALOG";
/// Root used when neither a flag nor the environment names one.
pub const DEFAULT_ROOT: &str = "qgraph-catalog";
const INDEX: &str = "index.tsv";
const LOCK: &str = ".lock";

#[derive(Debug)]
pub enum CatalogError {
    Io(io::Error),
    Artifact(ArtifactError),
    Missing(String),
    Ambiguous(String),
}

impl std::fmt::Display for CatalogError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogError::Io(e) => write!(f, "catalog I/O: {e}"),
            CatalogError::Artifact(e) => write!(f, "{e}"),
            CatalogError::Missing(what) => write!(f, "no artifact matches {what}"),
            CatalogError::Ambiguous(p) => write!(f, "hash prefix {p} matches several artifacts"),
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<io::Error> for CatalogError {
    fn from(e: io::Error) -> Self {
        CatalogError::Io(e)
    }
}

impl From<ArtifactError> for CatalogError {
    fn from(e: ArtifactError) -> Self {
        CatalogError::Artifact(e)
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    root: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexEntry {
    pub hash: String,
    pub kind: Kind,
    pub summary: String,
}

struct Lock(PathBuf);

impl Lock {
    fn acquire(root: &Path) -> io::Result<Lock> {
        let path = root.join(LOCK);
        for _ in 0..200 {
            match OpenOptions::new().write(true).create_new(true).open(&path) {
                Ok(_) => return Ok(Lock(path)),
                Err(e) if e.kind() == io::ErrorKind::AlreadyExists => thread::sleep(Duration::from_millis(25)),
                Err(e) => return Err(e),
            }
        }
        Err(io::Error::new(io::ErrorKind::WouldBlock, format!("catalog locked: {}", path.display())))
    }
}

impl Drop for Lock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

impl Catalog {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Catalog { root: root.into() }
    }

    /// Explicit root, else `$QGRAPH_CATALOG`, else [`DEFAULT_ROOT`].
    pub fn locate(explicit: Option<&Path>) -> Self {
        let root = explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_ROOT));
        Catalog::new(root)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path_of(&self, hash: &str) -> PathBuf {
        self.root.join(format!("{hash}.json"))
    }

    /// Stores `record` unless an artifact with its hash already exists.
    pub fn put(&self, record: &ArtifactRecord, summary: &str) -> Result<PathBuf, CatalogError> {
        fs::create_dir_all(&self.root)?;
        let _lock = Lock::acquire(&self.root)?;
        let path = self.path_of(&record.hash);
        if !path.exists() {
            let tmp = self.root.join(format!(".{}.tmp", record.hash));
            fs::write(&tmp, record.to_canonical())?;
            fs::rename(&tmp, &path)?;
        }
        if !self.index()?.iter().any(|e| e.hash == record.hash) {
            let mut f = OpenOptions::new().create(true).append(true).open(self.root.join(INDEX))?;
            let summary = summary.replace(['\t', '\n'], " ");
            writeln!(f, "{}\t{}\t{}", record.hash, record.kind, summary)?;
        }
        Ok(path)
    }

    pub fn index(&self) -> Result<Vec<IndexEntry>, CatalogError> {
        let text = match fs::read_to_string(self.root.join(INDEX)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        Ok(text
            .lines()
            .filter_map(|line| {
                let mut parts = line.splitn(3, '\t');
                let hash = parts.next()?.to_string();
                let kind = parts.next()?.parse().ok()?;
                let summary = parts.next().unwrap_or("").to_string();
                Some(IndexEntry { hash, kind, summary })
            })
            .collect())
    }

    /// Loads by full hash or unique prefix of at least 8 hex digits.
    pub fn get(&self, hash: &str) -> Result<ArtifactRecord, CatalogError> {
        let full = if hash.len() == 64 {
            hash.to_string()
        } else {
            if hash.len() < 8 {
                return Err(CatalogError::Missing(format!("hash `{hash}` (prefix shorter than 8)")));
            }
            let hits: Vec<String> =
                self.index()?.into_iter().map(|e| e.hash).filter(|h| h.starts_with(hash)).collect();
            match hits.len() {
                0 => return Err(CatalogError::Missing(format!("hash `{hash}`"))),
                1 => hits.into_iter().next().expect("one hit"),
                _ => return Err(CatalogError::Ambiguous(hash.into())),
            }
        };
        let text = match fs::read_to_string(self.path_of(&full)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                return Err(CatalogError::Missing(format!("hash `{hash}` in {}", self.root.display())))
            }
            Err(e) => return Err(e.into()),
        };
        Ok(ArtifactRecord::parse(&text)?)
    }

    /// Most recently indexed artifact of `kind`.
    pub fn latest(&self, kind: Kind) -> Result<ArtifactRecord, CatalogError> {
        let entry = self
            .index()?
            .into_iter()
            .rev()
            .find(|e| e.kind == kind)
            .ok_or_else(|| CatalogError::Missing(format!("kind {kind} in {}", self.root.display())))?;
        self.get(&entry.hash)
    }
}
