use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("spec file: {}{msg}", line_prefix(*.line))]
    Spec { line: usize, msg: String },
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] gabidulin_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

fn line_prefix(line: usize) -> String {
    if line == 0 {
        String::new()
    } else {
        format!("line {line}: ")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
