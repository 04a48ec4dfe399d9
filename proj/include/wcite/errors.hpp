#pragma once

// Exception hierarchy. Every error raised by the library derives from
// wcite::Error so callers (the CLI in particular) can catch one type.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcite {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// corpus-model
class DuplicateScoreRow : public Error {
public:
    DuplicateScoreRow(const std::string& journal, int year)
        : Error("duplicate score row for " + journal + " " + std::to_string(year)),
          journal_(journal), year_(year) {}
    const std::string& journal() const noexcept { return journal_; }
    int year() const noexcept { return year_; }

private:
    std::string journal_;
    int year_;
};

class InconsistentPubYear : public Error {
public:
    explicit InconsistentPubYear(const std::string& article)
        : Error("inconsistent publication year for " + article), article_(article) {}
    const std::string& article() const noexcept { return article_; }

private:
    std::string article_;
};

class InvalidYear : public Error {
public:
    using Error::Error;
};

// ingest
class FileUnreadable : public Error {
public:
    explicit FileUnreadable(const std::string& path)
        : Error("cannot read file: " + path), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class HeaderMismatch : public Error {
public:
    using Error::Error;
};

// A scores-file row that cannot become a JournalYearScore. Carries the
// 1-based line number of the offending row.
class ScoreRowError : public Error {
public:
    ScoreRowError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class MissingBothScoreForms : public ScoreRowError {
public:
    explicit MissingBothScoreForms(std::size_t line)
        : ScoreRowError("row has neither article_influence nor eigenfactor+alpha", line) {}
};

class MalformedScoreRow : public ScoreRowError {
public:
    using ScoreRowError::ScoreRowError;
};

class InconsistentArticleInfluence : public ScoreRowError {
public:
    explicit InconsistentArticleInfluence(std::size_t line)
        : ScoreRowError("article_influence disagrees with 0.01*eigenfactor/alpha", line) {}
};

class InvalidAlias : public Error {
public:
    using Error::Error;
};

// scoring
class NonPositiveAlpha : public Error {
public:
    NonPositiveAlpha() : Error("alpha must be positive") {}
};

class UnknownArticle : public Error {
public:
    explicit UnknownArticle(const std::string& article)
        : Error("unknown article: " + article), article_(article) {}
    const std::string& article() const noexcept { return article_; }

private:
    std::string article_;
};

// decay
class InsufficientData : public Error {
public:
    using Error::Error;
};

// crsm / analytics
class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& op) : Error(op + ": empty input") {}
};

class DuplicateArticle : public Error {
public:
    explicit DuplicateArticle(const std::string& article)
        : Error("duplicate article: " + article), article_(article) {}
    const std::string& article() const noexcept { return article_; }

private:
    std::string article_;
};

class InternalConsistency : public Error {
public:
    using Error::Error;
};

class DegenerateX : public Error {
public:
    DegenerateX() : Error("linear_r2: all x values are equal") {}
};

class CitedArticleOutsideUniverse : public Error {
public:
    explicit CitedArticleOutsideUniverse(const std::string& article)
        : Error("cited article not in universe: " + article), article_(article) {}
    const std::string& article() const noexcept { return article_; }

private:
    std::string article_;
};

// synthgen
class InvalidSpec : public Error {
public:
    using Error::Error;
};

} // namespace wcite
