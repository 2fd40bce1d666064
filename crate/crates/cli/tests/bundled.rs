use std::path::PathBuf;

use gradalg_cli::bundle;
use gradalg_cli::format::{parse_algebra, parse_group_hom, parse_hom};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Set `GRADALG_WRITE_DATA=1` to regenerate the files.
#[test]
fn bundled_documents_match_rendering() {
    let dir = data_dir();
    let write = std::env::var_os("GRADALG_WRITE_DATA").is_some();
    for (name, contents) in bundle::documents() {
        let path = dir.join(&name);
        if write {
            std::fs::write(&path, &contents).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, contents, "{name} is stale");
    }
}

#[test]
fn bundled_documents_parse() {
    let dir = data_dir();
    for (name, contents) in bundle::documents() {
        let ok = if name.starts_with("hom_") {
            parse_hom(&contents, Some(&dir)).is_ok()
        } else if name.starts_with("ghom_") {
            parse_group_hom(&contents).is_ok()
        } else {
            parse_algebra(&contents).is_ok()
        };
        assert!(ok, "{name}");
    }
}

#[test]
fn no_stray_files() {
    let expected: Vec<String> = bundle::documents().into_iter().map(|(n, _)| n).collect();
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        assert!(expected.contains(&name), "unexpected data file {name}");
    }
}
