use orthoposet::enumerate::{enumerate, EnumJob, ExtensionOrder, Filter};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args[1].parse().unwrap();
    let order: ExtensionOrder = args.get(2).map_or("max", |s| s.as_str()).parse().unwrap();
    let mut job = EnumJob::new(n).order(order);
    job.feasibility_limit = 64;
    for f in args.iter().skip(3) {
        job = job.filter(f.parse::<Filter>().unwrap());
    }
    let t = Instant::now();
    let r = enumerate(&job).unwrap();
    println!("{:?}\nvisited {:?}\n{:?}", r.counts_by_size, r.visited_by_size, t.elapsed());
}
