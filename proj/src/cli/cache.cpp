#include <kneser/cli.hpp>

#include <fstream>

namespace kneser::cli
{
    ResultCache::ResultCache(std::filesystem::path directory)
    {
        std::error_code ec;
        std::filesystem::create_directories(directory, ec);
        if (ec)
            throw IoError("cannot create cache directory '" + directory.string() + "': " + ec.message());
        _file = directory / "records.jsonl";
    }

    auto ResultCache::key_for(std::string_view command, const nlohmann::json & params) -> std::string
    {
        return sha256_hex(std::string(command) + '\n' + params.dump() + '\n' + std::string(tool_version));
    }

    auto ResultCache::lookup(const std::string & key) const -> std::optional<nlohmann::json>
    {
        std::ifstream in(_file);
        if (! in)
            return std::nullopt;
        std::string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (line.empty())
                continue;
            auto record = nlohmann::json::parse(line, nullptr, false);
            if (record.is_discarded() || ! record.contains("key") || ! record.contains("digest")
                || ! record.contains("result"))
                throw IoError("cache record " + std::to_string(line_number) + " is malformed");
            if (record["key"] != key)
                continue;
            if (sha256_hex(record["result"].dump()) != record["digest"])
                throw IoError("cache record " + std::to_string(line_number) + " fails its digest check");
            return record["result"];
        }
        return std::nullopt;
    }

    void ResultCache::store(const std::string & key, const nlohmann::json & result) const
    {
        std::ofstream out(_file, std::ios::app);
        if (! out)
            throw IoError("cannot append to cache file '" + _file.string() + "'");
        nlohmann::json record{{"key", key}, {"digest", sha256_hex(result.dump())}, {"result", result}};
        out << record.dump() << '\n';
        if (! out)
            throw IoError("write to cache file failed");
    }

    auto ResultCache::sampled_for_verification(const std::string & key) -> bool
    {
        return std::stoul(key.substr(0, 8), nullptr, 16) % 10 == 0;
    }
}
