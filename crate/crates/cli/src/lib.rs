//! Session files for the `doubletorus` tool: parsing, execution and the
//! `key=value` record format.

pub mod record;
pub mod run;
pub mod session;
pub mod syntax;

pub use record::{parse_record, Record, RecordError};
pub use run::{run_session, run_text, RunOptions, RunReport, EXIT_FAILED, EXIT_INPUT, EXIT_OK};
pub use session::{parse_session, Command, Session, SessionError};
