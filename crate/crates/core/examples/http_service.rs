//! Starts the JSON service on a free port and talks to it over a raw socket.

use std::io::{Read, Write};
use std::net::TcpStream;

fn request(addr: std::net::SocketAddr, method: &str, path: &str, body: &str) -> String {
    let mut s = TcpStream::connect(addr).unwrap();
    write!(s, "{method} {path} HTTP/1.1\r\nHost: localhost\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}", body.len()).unwrap();
    let mut out = String::new();
    s.read_to_string(&mut out).unwrap();
    out.split_once("\r\n\r\n").map(|(_, b)| b.to_string()).unwrap_or(out)
}

fn main() {
    let addr = cyclic_cluster::server::spawn(0).unwrap();
    println!("serving on http://{addr}");
    let seed = request(addr, "GET", "/api/model?p=2&n=4", "");
    print!("GET /api/model -> {seed}");
    let body = format!(r#"{{"cluster":{},"index":1}}"#, seed.trim());
    print!("POST /api/mutate -> {}", request(addr, "POST", "/api/mutate", &body));
    print!("POST /api/quiver -> {}", request(addr, "POST", "/api/quiver", &format!(r#"{{"cluster":{}}}"#, seed.trim())));
    let compat = r#"{"a":{"kind":"regular","x":"0/1","y":"1/2"},"b":{"kind":"singular","x":"1/4","sign":"+"}}"#;
    print!("POST /api/compat -> {}", request(addr, "POST", "/api/compat", compat));
}
