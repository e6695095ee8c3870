#include <CLI11.hpp>
#include <httplib.h>

#include <iostream>

#include "troprank/service.hpp"

int main(int argc, char** argv) {
  CLI::App app{"HTTP/JSON service for rating alternatives"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string persist;
  std::string cors_origin = "*";
  app.add_option("--host", host, "Address to bind");
  app.add_option("--port", port, "Port to listen on")->check(CLI::Range(1, 65535));
  app.add_option("--persist", persist, "Directory for JSON session files");
  app.add_option("--cors-origin", cors_origin, "Allowed CORS origin");
  CLI11_PARSE(app, argc, argv);

  std::optional<std::filesystem::path> dir;
  if (!persist.empty()) dir = persist;
  troprank::service::SessionStore store(dir);
  httplib::Server server;
  troprank::service::install_routes(server, store, {cors_origin});
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}
