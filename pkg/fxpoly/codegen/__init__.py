# Input documents
from ._nfd import NfdDocument, parse_nfd, parse_ppd, nfd_from_json, bundled_nfd, BUNDLED_NFDS

# Templates and rendering
from ._template import Template, TemplateSource, BundledTemplateSource, FileTemplateSource, \
    load_template, render, BUNDLED_TEMPLATES

# End to end
from ._pipeline import PipelineResult, pipeline, write_report
