def format_type(type_):
    if isinstance(type_, type) and not hasattr(type_, "__origin__"):
        return type_.__name__

    return str(type_)
