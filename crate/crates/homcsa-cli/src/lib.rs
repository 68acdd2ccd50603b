pub mod formats;
pub mod report_json;
pub mod search;
