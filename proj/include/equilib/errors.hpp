#pragma once

#include <stdexcept>
#include <string>

namespace equilib {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geom_core
struct DegenerateInput : Error { using Error::Error; };
struct EmptyResult : Error { using Error::Error; };
struct DegenerateGeometry : Error { using Error::Error; };

// equilibria
struct ReferenceNotInterior : Error { using Error::Error; };
struct DegenerateReport : Error { using Error::Error; };

// construct
struct InfeasibleChain : Error { using Error::Error; };
struct InfeasibleProfile : Error { using Error::Error; };
struct ConvexityLoss : Error { using Error::Error; };

struct GenerationFailed : Error {
    GenerationFailed(const std::string& msg, std::string diag)
        : Error(msg), diagnostics(std::move(diag)) {}
    std::string diagnostics;
};

// metrics
struct OriginNotInterior : Error { using Error::Error; };
struct DegeneratePolygon : Error { using Error::Error; };

// dynamics
struct DegenerateRest : Error { using Error::Error; };

// cli_io
struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), col(col_) {}
    int line = 0;
    int col = 0;
};

struct NotConvex : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

}  // namespace equilib
