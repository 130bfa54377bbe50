//! Runs the puzzle API and plays a few moves against it over HTTP.
//!
//! Pass `--serve` to keep the server running on port 8080 instead.

use std::io::{Read, Write};
use std::net::{SocketAddr, TcpStream};

use pgq::app::server::serve;
use serde_json::{json, Value};

fn request(addr: SocketAddr, method: &str, path: &str, body: Option<Value>) -> Value {
    let body = body.map(|b| b.to_string()).unwrap_or_default();
    let mut stream = TcpStream::connect(addr).unwrap();
    let req = format!(
        "{method} {path} HTTP/1.1\r\nHost: localhost\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    );
    stream.write_all(req.as_bytes()).unwrap();
    let mut raw = String::new();
    stream.read_to_string(&mut raw).unwrap();
    let (head, payload) = raw.split_once("\r\n\r\n").unwrap();
    println!("{method} {path} -> {}", head.lines().next().unwrap());
    serde_json::from_str(payload).unwrap_or(Value::Null)
}

fn main() {
    let rt = tokio::runtime::Runtime::new().unwrap();
    if std::env::args().any(|a| a == "--serve") {
        let addr = SocketAddr::from(([127, 0, 0, 1], 8080));
        println!("listening on http://{addr}");
        rt.block_on(serve(addr)).unwrap();
        return;
    }
    let addr = SocketAddr::from(([127, 0, 0, 1], 38571));
    rt.spawn(serve(addr));
    std::thread::sleep(std::time::Duration::from_millis(200));

    let plane = request(addr, "GET", "/api/plane/3", None);
    println!("  {} points, {} lines", plane["points"].as_array().unwrap().len(), plane["lines"].as_array().unwrap().len());

    let s = request(addr, "POST", "/api/sessions", Some(json!({"q": 5, "scramble_length": 0})));
    let id = s["id"].as_u64().unwrap();
    println!("  session {id}, hole {}, solved {}", s["hole"], s["solved"]);

    let p = request(addr, "GET", &format!("/api/sessions/{id}/preview?target=7"), None);
    println!("  preview: line {}, pairs {}", p["line"], p["pairs"]);
    let m = request(addr, "POST", &format!("/api/sessions/{id}/moves"), Some(json!({"target": 7})));
    println!("  applied pairs {}, solved {}", m["applied"]["pairs"], m["session"]["solved"]);
    let u = request(addr, "POST", &format!("/api/sessions/{id}/undo"), None);
    println!("  after undo: hole {}, solved {}", u["session"]["hole"], u["session"]["solved"]);

    let e = request(addr, "POST", &format!("/api/sessions/{id}/moves"), Some(json!({"target": 0})));
    println!("  {}", e["error"]);
    request(addr, "GET", "/api/sessions/999", None);
}
