# Import the command-line factory from the grasskt package
from grasskt import create_cli

# Create the command-line interface using the factory function
cli = create_cli()


# Run the tool if this file is executed directly
if __name__ == "__main__":
    # Reports go to stdout, logs and progress bars to stderr
    cli()
