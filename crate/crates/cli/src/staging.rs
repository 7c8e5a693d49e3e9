//! Output directory staging: files are written to a hidden sibling directory
//! and moved into place only when the whole command succeeds.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

pub struct Staging {
    target: PathBuf,
    tmp: PathBuf,
    committed: bool,
}

impl Staging {
    pub fn new(target: &Path) -> Result<Self> {
        fs::create_dir_all(target).with_context(|| format!("creating {}", target.display()))?;
        let tmp = target.join(format!(".ocn-staging-{}", std::process::id()));
        if tmp.exists() {
            fs::remove_dir_all(&tmp)?;
        }
        fs::create_dir(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        Ok(Staging {
            target: target.to_path_buf(),
            tmp,
            committed: false,
        })
    }

    pub fn dir(&self) -> &Path {
        &self.tmp
    }

    /// Moves every staged file into the target directory.
    pub fn commit(mut self) -> Result<Vec<PathBuf>> {
        let mut names: Vec<_> = fs::read_dir(&self.tmp)?
            .map(|e| e.map(|e| e.file_name()))
            .collect::<std::io::Result<_>>()?;
        names.sort();
        let mut moved = Vec::with_capacity(names.len());
        for name in names {
            let dest = self.target.join(&name);
            fs::rename(self.tmp.join(&name), &dest)
                .with_context(|| format!("moving output into {}", dest.display()))?;
            moved.push(dest);
        }
        fs::remove_dir(&self.tmp)?;
        self.committed = true;
        Ok(moved)
    }
}

impl Drop for Staging {
    fn drop(&mut self) {
        if !self.committed {
            let _ = fs::remove_dir_all(&self.tmp);
        }
    }
}
