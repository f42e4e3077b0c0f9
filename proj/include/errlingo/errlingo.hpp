#pragma once

#include <errlingo/dictionary.hpp>
#include <errlingo/pipeline.hpp>
#include <errlingo/rate.hpp>
#include <errlingo/report.hpp>
#include <errlingo/runner.hpp>
#include <errlingo/text.hpp>
#include <errlingo/tokenizer.hpp>
