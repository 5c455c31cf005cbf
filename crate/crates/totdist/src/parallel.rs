//! Survey shards on worker threads.
//!
//! Shard `j` of `count` goes to thread `j % threads`; reports are merged in
//! shard order, and merging sorts extremal classes by certificate, so the
//! result does not depend on the thread count.

use std::thread;

use totdist_core::search::{
    max_wiener_outradius1_survey, max_wiener_radius_survey, min_wiener_radius_survey, ShardSpec,
    SurveyReport,
};
use totdist_core::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurveyJob {
    MinWiener { n: usize, r: usize },
    MaxWiener { n: usize, r: usize },
    OutRadiusOneMax { n: usize },
}

impl SurveyJob {
    pub fn run_shard(self, shard: &ShardSpec) -> Result<SurveyReport, Error> {
        match self {
            SurveyJob::MinWiener { n, r } => min_wiener_radius_survey(n, r, shard),
            SurveyJob::MaxWiener { n, r } => max_wiener_radius_survey(n, r, shard),
            SurveyJob::OutRadiusOneMax { n } => max_wiener_outradius1_survey(n, shard),
        }
    }
}

/// Runs `shards` shards of the survey on up to `threads` threads.
pub fn run_survey(job: SurveyJob, shards: usize, threads: usize) -> Result<SurveyReport, Error> {
    if shards == 0 {
        return Err(Error::InvalidShard { index: 0, count: 0 });
    }
    let threads = threads.clamp(1, shards);
    let results: Vec<Result<Vec<(usize, SurveyReport)>, Error>> = thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    (t..shards)
                        .step_by(threads)
                        .map(|j| Ok((j, job.run_shard(&ShardSpec::single(j, shards)?)?)))
                        .collect::<Result<Vec<_>, Error>>()
                })
            })
            .collect();
        workers
            .into_iter()
            .map(|w| w.join().expect("survey worker panicked"))
            .collect()
    });
    let mut parts = Vec::with_capacity(shards);
    for r in results {
        parts.extend(r?);
    }
    parts.sort_by_key(|(j, _)| *j);
    let merged = parts
        .into_iter()
        .map(|(_, rep)| rep)
        .reduce(|a, b| a.merge(b).expect("shards of one survey"))
        .expect("at least one shard");
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_does_not_matter() {
        let job = SurveyJob::MinWiener { n: 7, r: 3 };
        let one = run_survey(job, 4, 1).unwrap();
        let four = run_survey(job, 4, 4).unwrap();
        let whole = job.run_shard(&ShardSpec::all()).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.optimum, whole.optimum);
        assert_eq!(one.examined, whole.examined);
        assert!(run_survey(job, 0, 1).is_err());
    }
}
