#pragma once

// Named collections of categories, functors, modules and opcat structures,
// read from and written to canonical JSON.

#include <map>
#include <string>

#include "kanex/certify.hpp"

namespace kanex {

struct BatteryRef
{
    std::string category;
    std::vector<std::string> members;
};

struct Bundle
{
    BaseCtx ctx = BaseCtx::finset();
    std::map<std::string, CatRef> categories;
    std::map<std::string, VFunctor> functors;
    std::map<std::string, Module> copresheaves;
    std::map<std::string, Module> presheaves;
    std::map<std::string, Module> bimodules;
    std::map<std::string, Module> trimodules;
    std::map<std::string, OpcatStructure> opcats;
    std::map<std::string, BatteryRef> batteries;

    // Lookups throw UnknownObject naming the missing entry.
    const CatRef& category(const std::string& name) const;
    const VFunctor& functor(const std::string& name) const;
    const Module& copresheaf(const std::string& name) const;
    const Module& trimodule(const std::string& name) const;
    const OpcatStructure& opcat(const std::string& name) const;
    Battery battery(const std::string& name) const;
    std::string category_name(const CatRef& a) const;
};

Json bundle_to_json(const Bundle& b);
/// Resolves names and runs every law checker; throws InvalidStructure or UnknownObject.
Bundle bundle_from_json(const Json& j);
/// Sorted keys, two-space indent, trailing newline.
std::string save_bundle_string(const Bundle& b);
/// Parse errors carry line and column.
Bundle load_bundle_string(const std::string& text);
Bundle load_bundle(const std::string& path);
void save_bundle(const Bundle& b, const std::string& path);

std::vector<std::string> builtin_bundle_names();
Bundle builtin_bundle(const std::string& name);

} // namespace kanex
