#![no_main]

use libfuzzer_sys::fuzz_target;
use planar_turan::turan::{read_report_csv, write_report_csv};

fn write(rows: &[planar_turan::turan::ReportRow]) -> Vec<u8> {
    let mut buf = Vec::new();
    write_report_csv(rows, &mut buf).expect("writing to memory");
    buf
}

fuzz_target!(|data: &[u8]| {
    let Ok(rows) = read_report_csv(data) else { return };
    // Values are rounded on output, so a row sitting within 1e-6 of its
    // threshold may not survive the first pass. From then on it is a fixpoint.
    let first = write(&rows);
    if let Ok(again) = read_report_csv(&first) {
        assert_eq!(again.len(), rows.len());
        let second = write(&again);
        assert_eq!(second, first);
    }
});
